// zerocap: build channels and boxes, compute zero-error capacities and
// assisted success probabilities, run protocol searches and the
// reproduction checks.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zerocap/io.hpp"
#include "zerocap/verification.hpp"

namespace {

using namespace zerocap;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got \"" + s + "\"");
}

// "name:arg:arg" -> {name, args}; anything without a known name is a path.
struct SpecTerm {
  std::string name;
  std::vector<int> args;
};

std::optional<SpecTerm> parse_term(const std::string& text, const std::vector<std::string>& names) {
  auto parts = split(text, ':');
  for (const auto& n : names) {
    if (parts[0] != n) continue;
    SpecTerm t{n, {}};
    for (std::size_t k = 1; k < parts.size(); ++k) t.args.push_back(to_int(parts[k]));
    return t;
  }
  return std::nullopt;
}

int arg(const SpecTerm& t, std::size_t k, const char* usage) {
  if (t.args.size() <= k) throw UsageError(std::string("usage: ") + usage);
  return t.args[k];
}

Channel load_single_channel(const std::string& text) {
  if (auto t = parse_term(text, {"Nm", "Mm", "identity"})) {
    if (t->name == "Nm") return make_Nm(arg(*t, 0, "Nm:<m>"));
    if (t->name == "Mm") return make_Mm(arg(*t, 0, "Mm:<m>"));
    return make_identity_channel(arg(*t, 0, "identity:<n>"));
  }
  return channel_from_json(read_json_file(text));
}

Channel load_channel(const std::string& text) {
  const auto factors = split(text, '*');
  Channel c = load_single_channel(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) c = tensor_channels(c, load_single_channel(factors[k]));
  return c;
}

Behavior load_single_box(const std::string& text) {
  if (auto t = parse_term(text, {"P", "pr", "rtilde", "jones", "cglmp", "i3322", "i3322-quantum",
                                 "uniform", "trivial"})) {
    if (t->name == "P") {
      const int m = arg(*t, 0, "P:<m>[:<k>]");
      return make_extremal_box(m, t->args.size() > 1 ? t->args[1] : m);
    }
    if (t->name == "pr") return make_extremal_box(2, 2);
    if (t->name == "rtilde") return make_rtilde_box(arg(*t, 0, "rtilde:<m>"));
    if (t->name == "jones") {
      return make_jones_box(arg(*t, 0, "jones:<m1>:<m2>"), arg(*t, 1, "jones:<m1>:<m2>"), {});
    }
    if (t->name == "cglmp") return make_cglmp_behavior();
    if (t->name == "i3322") return make_i3322_table();
    if (t->name == "i3322-quantum") return behavior_from_quantum(make_i3322_model());
    if (t->name == "uniform") {
      const char* usage = "uniform:<x>:<y>:<a>:<b>";
      return make_uniform_behavior({arg(*t, 0, usage), arg(*t, 1, usage), arg(*t, 2, usage),
                                    arg(*t, 3, usage)});
    }
    return make_trivial_box();
  }
  const Json j = read_json_file(text);
  if (j.is_object() && j.contains("dim_a")) return behavior_from_quantum(quantum_model_from_json(j));
  return behavior_from_json(j);
}

Behavior load_box(const std::string& text) {
  const auto factors = split(text, '*');
  Behavior b = load_single_box(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) b = tensor_behaviors(b, load_single_box(factors[k]));
  return b;
}

AssistedProtocol load_single_scheme(const std::string& text) {
  if (auto t = parse_term(text, {"theorem2", "theorem3"})) {
    if (t->name == "theorem2") return make_theorem2_protocol(arg(*t, 0, "theorem2:<m>"));
    return make_theorem3_protocol(arg(*t, 0, "theorem3:<m>"));
  }
  return protocol_from_json(read_json_file(text));
}

AssistedProtocol load_scheme(const std::string& text) {
  const auto factors = split(text, '*');
  AssistedProtocol p = load_single_scheme(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) p = tensor_protocols(p, load_single_scheme(factors[k]));
  return p;
}

std::string render(const Scalar& s, bool as_float) {
  return as_float || !s.is_rational() ? s.decimal(12) : s.str();
}

Json render_json(const Scalar& s, bool as_float) {
  return as_float ? Json(s.to_double()) : scalar_to_json(s);
}

std::string label_string(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

struct Common {
  bool json = false;
  bool as_float = false;
  bool serial = false;
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

void add_common(CLI::App* cmd, Common& c, bool with_float = true) {
  cmd->add_flag("--json", c.json, "Machine-readable output");
  if (with_float) cmd->add_flag("--float", c.as_float, "Render numbers as decimals (12 digits)");
  cmd->add_flag("--serial", c.serial, "Use the serial reference kernels");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-error capacities and correlation-assisted coding over noisy channels"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // channel
  Common channel_opts;
  std::string family, channel_input, channel_out;
  int channel_m = 3;
  bool channel_csv = false;
  auto* channel_cmd = app.add_subcommand("channel", "Build a channel and write it as JSON");
  channel_cmd->add_option("--family", family, "Nm, Mm, identity or custom")
      ->required()
      ->check(CLI::IsMember({"Nm", "Mm", "identity", "custom"}));
  channel_cmd->add_option("--m", channel_m, "Family parameter (size for identity)");
  channel_cmd->add_option("--input", channel_input, "Channel JSON for --family custom");
  channel_cmd->add_option("--out", channel_out, "Write the channel JSON here");
  channel_cmd->add_flag("--csv", channel_csv, "Print the matrix as CSV");
  add_common(channel_cmd, channel_opts, false);
  channel_cmd->callback([&] {
    Channel c = family == "Nm"         ? make_Nm(channel_m)
                : family == "Mm"       ? make_Mm(channel_m)
                : family == "identity" ? make_identity_channel(channel_m)
                : channel_input.empty()
                    ? throw UsageError("--family custom needs --input")
                    : channel_from_json(read_json_file(channel_input));
    const std::string json = channel_to_json(c).dump(2) + "\n";
    if (!channel_out.empty()) write_text_file(channel_out, json);
    if (channel_csv) {
      std::cout << channel_to_csv(c);
    } else if (channel_opts.json) {
      std::cout << json;
    } else {
      std::cout << "inputs: " << c.input_count() << "\noutputs: " << c.output_count() << "\n";
      if (!channel_out.empty()) std::cout << "written: " << channel_out << "\n";
    }
  });

  // behavior
  Common behavior_opts;
  std::string box_spec, behavior_out;
  bool behavior_csv = false;
  auto* behavior_cmd = app.add_subcommand("behavior", "Build or load a box and check it");
  behavior_cmd
      ->add_option("box", box_spec,
                   "P:<m>[:<k>], pr, rtilde:<m>, jones:<m1>:<m2>, cglmp, i3322, i3322-quantum, "
                   "uniform:<x>:<y>:<a>:<b>, trivial, a behavior or quantum-model JSON file; "
                   "join factors with '*'")
      ->required();
  behavior_cmd->add_option("--out", behavior_out, "Write the behavior JSON here");
  behavior_cmd->add_flag("--csv", behavior_csv, "Print the table as CSV");
  add_common(behavior_cmd, behavior_opts);
  behavior_cmd->callback([&] {
    const Behavior b = load_box(box_spec);
    const std::string json = behavior_to_json(b).dump(2) + "\n";
    if (!behavior_out.empty()) write_text_file(behavior_out, json);
    const auto violations = validate_behavior(b);
    const auto ns = is_no_signaling(b);
    if (behavior_csv) {
      std::cout << behavior_to_csv(b);
    } else if (behavior_opts.json) {
      Json j = behavior_to_json(b);
      j["valid"] = violations.empty();
      j["no_signaling"] = ns.no_signaling;
      j["max_signaling"] = ns.max_violation;
      std::cout << j.dump(2) << "\n";
    } else {
      const auto& s = b.scenario();
      std::cout << "scenario: x=" << s.x_card << " y=" << s.y_card << " a=" << s.a_card
                << " b=" << s.b_card << "\nmode: " << to_string(b.mode())
                << "\nvalid: " << (violations.empty() ? "yes" : "no")
                << "\nno-signaling: " << (ns.no_signaling ? "yes" : "no")
                << " (max violation " << ns.max_violation << ")\n";
      for (const auto& v : violations) {
        std::cout << "  " << v.constraint << " at " << v.location << ": " << v.detail << "\n";
      }
    }
    if (!violations.empty()) exit_code = kCheckFailed;
  });

  // capacity
  Common capacity_opts;
  std::string capacity_channel;
  std::size_t capacity_limit = kDefaultAlphaLimit;
  auto* capacity_cmd = app.add_subcommand("capacity", "One-shot zero-error capacity log2 alpha");
  capacity_cmd->add_option("channel", capacity_channel, "Nm:<m>, Mm:<m>, identity:<n> or a channel JSON file")
      ->required();
  capacity_cmd->add_option("--limit", capacity_limit, "Maximum vertex count for the exact search");
  add_common(capacity_cmd, capacity_opts, false);
  capacity_cmd->callback([&] {
    const auto r = zero_error_capacity_oneshot(load_channel(capacity_channel), capacity_opts.exec(),
                                               capacity_limit);
    if (capacity_opts.json) {
      std::cout << capacity_to_json(r).dump(2) << "\n";
      return;
    }
    std::cout << "alpha: " << r.alpha << "\ncapacity: ";
    if (r.exact_bits) {
      std::cout << *r.exact_bits << " bits\n";
    } else {
      std::cout << Scalar::floating(r.bits).decimal(12) << " bits\n";
    }
    std::cout << "complete: " << (r.complete ? "true" : "false") << "\n";
  });

  // graph
  Common graph_opts;
  std::string graph_channel, graph_format = "dimacs", graph_out, graph_in;
  bool graph_alpha = false;
  auto* graph_cmd = app.add_subcommand("graph", "Export a confusability graph or analyze a graph file");
  graph_cmd->add_option("channel", graph_channel, "Channel whose confusability graph is exported");
  graph_cmd->add_option("--input", graph_in, "Read a graph (DIMACS, or JSON if it ends in .json)");
  graph_cmd->add_option("--format", graph_format, "dimacs or json")
      ->check(CLI::IsMember({"dimacs", "json"}));
  graph_cmd->add_option("--out", graph_out, "Write the graph here");
  graph_cmd->add_flag("--alpha", graph_alpha, "Report the independence number");
  add_common(graph_cmd, graph_opts, false);
  graph_cmd->callback([&] {
    if (graph_channel.empty() == graph_in.empty()) {
      throw UsageError("give either a channel or --input");
    }
    const ConfusabilityGraph g = [&] {
      if (!graph_channel.empty()) return confusability_graph(load_channel(graph_channel));
      if (graph_in.ends_with(".json")) return graph_from_json(read_json_file(graph_in));
      try {
        return graph_from_dimacs(read_text_file(graph_in));
      } catch (const FormatError& e) {
        throw FormatError(graph_in + ": " + e.what());
      }
    }();
    if (graph_alpha) {
      const std::size_t alpha = independence_number(g, graph_opts.exec(), 1000);
      if (graph_opts.json) {
        std::cout << Json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"alpha", alpha}}.dump(2)
                  << "\n";
      } else {
        std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
                  << "\nalpha: " << alpha << "\n";
      }
      return;
    }
    emit(graph_format == "json" ? graph_to_json(g).dump(2) + "\n" : graph_to_dimacs(g), graph_out);
  });

  // success
  Common success_opts;
  std::string success_channel, success_box, success_scheme;
  std::optional<std::uint64_t> mc_trials, mc_seed;
  auto* success_cmd = app.add_subcommand("success", "Success probability of an assisted protocol");
  success_cmd->add_option("--channel", success_channel, "Channel spec or JSON file")->required();
  success_cmd->add_option("--box", success_box, "Box spec or JSON file")->required();
  success_cmd->add_option("--scheme", success_scheme, "theorem2:<m>, theorem3:<m> or protocol JSON; join with '*'")
      ->required();
  success_cmd->add_flag("--exact", "Exact evaluation (default)");
  success_cmd->add_option("--mc", mc_trials, "Monte Carlo with this many trials");
  success_cmd->add_option("--seed", mc_seed, "Seed for --mc (required)");
  add_common(success_cmd, success_opts);
  success_cmd->callback([&] {
    Channel c = load_channel(success_channel);
    Behavior box = load_box(success_box);
    const AssistedProtocol p = load_scheme(success_scheme);
    NumericMode mode = NumericMode::rational;
    if (c.mode() == NumericMode::floating || box.mode() == NumericMode::floating) {
      mode = NumericMode::floating;
      c = convert(c, mode);
      box = convert(box, mode);
    }
    const MessagePrior prior = uniform_prior(p.message_count, mode);
    if (mc_trials) {
      if (!mc_seed) throw UsageError("--mc needs an explicit --seed");
      const auto r = monte_carlo_success(c, box, p, prior, *mc_trials, *mc_seed, success_opts.exec());
      if (success_opts.json) {
        std::cout << Json{{"estimate", r.estimate},
                          {"std_error", r.std_error},
                          {"successes", r.successes},
                          {"trials", r.trials},
                          {"seed", *mc_seed}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "success: " << Scalar::floating(r.estimate).decimal(12) << " +- "
                  << Scalar::floating(r.std_error).decimal(3) << " (" << r.successes << "/"
                  << r.trials << ")\n";
      }
      return;
    }
    const Scalar s = exact_success(c, box, p, prior);
    const bool zero_error = mode == NumericMode::rational ? is_zero_error(c, box, p)
                                                          : zero_error_violations(c, box, p).empty();
    const std::size_t branches = reachable_branches(c, box, p).size();
    if (success_opts.json) {
      Json j = success_record(s, zero_error, branches);
      j["success"] = render_json(s, success_opts.as_float);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "success: " << render(s, success_opts.as_float)
                << "\nzero_error: " << (zero_error ? "true" : "false") << "\nbranches: " << branches
                << "\n";
    }
  });

  // search-classical
  Common classical_opts;
  std::string classical_channel;
  int classical_k = 2;
  double classical_limit = 1e9;
  auto* classical_cmd = app.add_subcommand("search-classical", "Best unassisted one-shot code (MAP decoding)");
  classical_cmd->add_option("--channel", classical_channel, "Channel spec or JSON file")->required();
  classical_cmd->add_option("--messages", classical_k, "Number of messages K")->check(CLI::PositiveNumber);
  classical_cmd->add_option("--limit", classical_limit, "Work limit");
  add_common(classical_cmd, classical_opts);
  classical_cmd->callback([&] {
    const Channel c = load_channel(classical_channel);
    const auto r = best_unassisted_success(c, classical_k, uniform_prior(classical_k, c.mode()),
                                           classical_opts.exec(), classical_limit);
    std::vector<std::string> encoder;
    for (auto in : r.encoder) encoder.push_back(label_string(c.input_space().label(in)));
    if (classical_opts.json) {
      std::cout << Json{{"success", render_json(r.success, classical_opts.as_float)},
                        {"encoder", encoder},
                        {"decoder", r.decoder},
                        {"encoders_examined", r.encoders_examined}}
                       .dump(2)
                << "\n";
      return;
    }
    std::cout << "success: " << render(r.success, classical_opts.as_float) << "\nencoder:";
    for (std::size_t g = 0; g < encoder.size(); ++g) std::cout << " " << g << "->" << encoder[g];
    std::cout << "\nencoders examined: " << r.encoders_examined << "\n";
  });

  // search-assisted
  Common assisted_opts;
  std::string assisted_channel, assisted_box, assisted_out;
  int assisted_k = 2;
  double assisted_limit = 1e9;
  auto* assisted_cmd = app.add_subcommand("search-assisted", "Exhaustive search for a zero-error assisted code");
  assisted_cmd->add_option("--channel", assisted_channel, "Channel spec or JSON file")->required();
  assisted_cmd->add_option("--box", assisted_box, "Box spec or JSON file")->required();
  assisted_cmd->add_option("--messages", assisted_k, "Number of messages K")->check(CLI::PositiveNumber);
  assisted_cmd->add_option("--limit", assisted_limit, "Maximum estimated branch evaluations");
  assisted_cmd->add_option("--out", assisted_out, "Write the protocol JSON here");
  add_common(assisted_cmd, assisted_opts, false);
  assisted_cmd->callback([&] {
    const auto r = exhaustive_assisted_search(load_channel(assisted_channel), load_box(assisted_box),
                                              assisted_k, SearchLimits{assisted_limit},
                                              assisted_opts.exec());
    if (r.found() && !assisted_out.empty()) {
      write_text_file(assisted_out, protocol_to_json(*r.protocol).dump(2) + "\n");
    }
    if (assisted_opts.json) {
      Json j{{"found", r.found()},
             {"encoders_examined", r.encoders_examined},
             {"encoders_total", r.encoders_total}};
      j["protocol"] = r.found() ? protocol_to_json(*r.protocol) : Json(nullptr);
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "found: " << (r.found() ? "yes" : "no") << "\nencoders examined: "
              << r.encoders_examined << " of " << r.encoders_total << "\n";
  });

  // verify-paper
  Common verify_opts;
  VerificationOptions verification;
  std::string fault;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reproduction checks");
  verify_cmd->add_flag("--slow", verification.slow, "Include the exhaustive protocol searches");
  verify_cmd->add_option("--inject-fault", fault, "Corrupt a component on purpose (pi-hat)")
      ->check(CLI::IsMember({"pi-hat"}));
  verify_cmd->add_flag("--json", verify_opts.json, "Machine-readable report");
  verify_cmd->callback([&] {
    verification.inject_pi_hat_fault = fault == "pi-hat";
    const auto report = run_verification(verification);
    std::cout << (verify_opts.json ? report_to_json(report).dump(2) + "\n" : report_table(report));
    if (!report.all_passed()) exit_code = kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
