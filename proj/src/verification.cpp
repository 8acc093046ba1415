#include "zerocap/verification.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace zerocap {

namespace {

// Support of the N_3 and M_3 stochastic matrices, one string per output
// (o1 major, o2 minor), one character per input in flat order.
constexpr const char* kN3Support[] = {
    "111000", "000111", "000000", "100100", "010010", "001001",
    "100001", "010100", "001010", "100010", "001100", "010001",
};
constexpr const char* kM3Support[] = {
    "110000", "001100", "000011", "100001", "011000", "000110", "100100",
    "001001", "010010", "100001", "010100", "001010", "101000", "000101",
    "010010", "100010", "011000", "000101", "100100", "001010", "010001",
};

// Column (x,y) -> p(0,0|x,y) of the dyadic 3-3-2-2 table, in eighths.
constexpr long kI3322Same[3][3] = {{3, 3, 4}, {4, 1, 3}, {3, 4, 1}};

std::string describe(const Branch& b) {
  std::ostringstream os;
  os << "message " << b.message << ", a=" << b.a << ", output " << b.out;
  if (b.b == kSkip) {
    os << " (box skipped)";
  } else {
    os << ", b=" << b.b;
  }
  os << " -> guess " << b.guess;
  return os.str();
}

std::string fmt(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void run(std::string name, std::string expected, std::string provenance, std::string mode,
           const std::function<bool(CheckResult&)>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.expected = std::move(expected);
    r.provenance = std::move(provenance);
    r.mode = std::move(mode);
    const auto start = std::chrono::steady_clock::now();
    try {
      r.pass = body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
};

bool matches_support(const Channel& c, const char* const* rows, std::size_t row_count,
                     const Scalar& weight, std::string& detail) {
  if (c.output_count() != row_count) {
    detail = "output count " + std::to_string(c.output_count());
    return false;
  }
  const Scalar zero = Scalar::zero(NumericMode::rational);
  for (std::size_t out = 0; out < row_count; ++out) {
    for (std::size_t in = 0; in < c.input_count(); ++in) {
      const Scalar& expected = rows[out][in] == '1' ? weight : zero;
      if (c(out, in) != expected) {
        detail = "entry (out " + std::to_string(out) + ", in " + std::to_string(in) + ") = " +
                 c(out, in).str();
        return false;
      }
    }
  }
  return true;
}

double csc2(double t) { return 1.0 / (std::sin(t) * std::sin(t)); }

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int corrupted_pi_hat(int m, int u) { return (m - u + 1) % m; }

VerificationReport run_verification(const VerificationOptions& options) {
  using std::numbers::pi;
  VerificationReport report;
  Runner run(report);
  const auto rational = NumericMode::rational;

  run.run("N_3 stochastic matrix", "12x6 table, entries 0 or 1/4", "reference table", "exact",
          [&](CheckResult& r) {
            const bool ok = matches_support(make_Nm(3), kN3Support, 12, Scalar::rational(1, 4), r.detail);
            r.computed = ok ? "identical" : "differs";
            return ok;
          });
  run.run("M_3 stochastic matrix", "21x6 table, entries 0 or 1/7", "reference table", "exact",
          [&](CheckResult& r) {
            const bool ok = matches_support(make_Mm(3), kM3Support, 21, Scalar::rational(1, 7), r.detail);
            r.computed = ok ? "identical" : "differs";
            return ok;
          });

  run.run("N_m confusability graph complete, m=2..6", "alpha = 1", "reference result", "exact",
          [&](CheckResult& r) {
            bool ok = true;
            for (int m = 2; m <= 6; ++m) {
              const auto cap = zero_error_capacity_oneshot(make_Nm(m));
              r.computed += (m > 2 ? " " : "") + std::to_string(cap.alpha);
              if (cap.alpha != 1 || !cap.complete) {
                r.detail += (r.detail.empty() ? "not complete for m=" : ",") + std::to_string(m);
                ok = false;
              }
            }
            return ok;
          });
  run.run("M_m confusability graph complete, m=2..5", "alpha = 1", "reference result", "exact",
          [&](CheckResult& r) {
            for (int m = 2; m <= 5; ++m) {
              const auto cap = zero_error_capacity_oneshot(make_Mm(m));
              r.computed += (m > 2 ? " " : "") + std::to_string(cap.alpha);
              if (cap.alpha != 1 || !cap.complete) {
                r.detail = "m=" + std::to_string(m);
                return false;
              }
            }
            return true;
          });

  run.run("N_m with P_m, one bit zero-error, m=2..6", "success 1/1 on every branch",
          "reference theorem", "exact", [&](CheckResult& r) {
            for (int m = 2; m <= 6; ++m) {
              const auto p = options.inject_pi_hat_fault
                                 ? make_theorem2_protocol(m, corrupted_pi_hat)
                                 : make_theorem2_protocol(m);
              const auto c = make_Nm(m);
              const auto box = make_extremal_box(m, m);
              const auto bad = zero_error_violations(c, box, p);
              const Scalar s = exact_success(c, box, p, uniform_prior(2));
              r.computed += (m > 2 ? " " : "") + s.str();
              if (!bad.empty()) {
                r.detail = "m=" + std::to_string(m) + ": " + describe(bad.front());
                return false;
              }
              if (s != Scalar::one(rational)) return false;
            }
            return true;
          });
  run.run("M_m with R~_m, log m bits zero-error, m=2..5", "success 1/1 on every branch",
          "reference theorem", "exact", [&](CheckResult& r) {
            for (int m = 2; m <= 5; ++m) {
              const auto c = make_Mm(m);
              const auto box = make_rtilde_box(m);
              const auto p = make_theorem3_protocol(m);
              const auto bad = zero_error_violations(c, box, p);
              const Scalar s = exact_success(c, box, p, uniform_prior(m));
              r.computed += (m > 2 ? " " : "") + s.str();
              if (!bad.empty()) {
                r.detail = "m=" + std::to_string(m) + ": " + describe(bad.front());
                return false;
              }
              if (s != Scalar::one(rational)) return false;
            }
            return true;
          });

  run.run("unassisted optimum, N_3, 2 messages", "7/8", "reference value", "exact",
          [&](CheckResult& r) {
            const auto best = best_unassisted_success(make_Nm(3), 2, uniform_prior(2));
            r.computed = best.success.str();
            return best.success == Scalar::rational(7, 8);
          });
  run.run("unassisted optimum, M_3, 3 messages", "17/21", "reference value", "exact",
          [&](CheckResult& r) {
            const auto best = best_unassisted_success(make_Mm(3), 3, uniform_prior(3));
            r.computed = best.success.str();
            return best.success == Scalar::rational(17, 21);
          });

  const double cglmp_closed =
      0.25 * (1.0 + csc2(pi / 4) / 36.0 + csc2(5 * pi / 12) / 18.0 + csc2(pi / 12) / 6.0);
  run.run("N_3 with the CGLMP correlation", fmt(cglmp_closed) + " (closed form), 0.9008",
          "reference value", "float", [&](CheckResult& r) {
            const auto c = convert(make_Nm(3), NumericMode::floating);
            const double s = exact_success(c, make_cglmp_behavior(), make_theorem2_protocol(3),
                                           uniform_prior(2, NumericMode::floating))
                                 .to_double();
            r.computed = fmt(s);
            r.detail = "tolerances 1e-12 and 5e-5";
            return std::abs(s - cglmp_closed) <= 1e-12 && std::abs(s - 0.9008) <= 5e-5;
          });

  run.run("M_3 with the dyadic 3-3-2-2 table", "6/7", "reference value", "exact",
          [&](CheckResult& r) {
            const Scalar s = exact_success(make_Mm(3), make_i3322_table(), make_theorem3_protocol(3),
                                           uniform_prior(3));
            r.computed = s.str();
            return s == Scalar::rational(6, 7);
          });
  run.run("M_3 with the singlet-angle quantum model", "6/7 within 1e-9", "reference value",
          "float", [&](CheckResult& r) {
            const auto box = behavior_from_quantum(make_i3322_model());
            const double s = exact_success(convert(make_Mm(3), NumericMode::floating), box,
                                           make_theorem3_protocol(3),
                                           uniform_prior(3, NumericMode::floating))
                                 .to_double();
            r.computed = fmt(s);
            return std::abs(s - 6.0 / 7.0) <= 1e-9;
          });
  run.run("singlet angles reproduce the dyadic table", "all 36 entries within 1e-12",
          "reference table", "float", [&](CheckResult& r) {
            const auto q = behavior_from_quantum(make_i3322_model());
            double worst = 0.0;
            for (int x = 0; x < 3; ++x)
              for (int y = 0; y < 3; ++y)
                for (int a = 0; a < 2; ++a)
                  for (int b = 0; b < 2; ++b) {
                    const double expected =
                        (a == b ? kI3322Same[x][y] : 4 - kI3322Same[x][y]) / 8.0;
                    const double diff = std::abs(q(x, y, a, b).to_double() - expected);
                    if (diff > worst) {
                      worst = diff;
                      r.detail = "largest deviation at x=" + std::to_string(x) +
                                 ",y=" + std::to_string(y) + ",a=" + std::to_string(a) +
                                 ",b=" + std::to_string(b);
                    }
                  }
            r.computed = "max deviation " + fmt(worst, 6);
            return worst <= 1e-12;
          });
  run.run("CGLMP correlation normalized and no-signaling", "within 1e-12", "closed form",
          "float", [&](CheckResult& r) {
            const auto b = make_cglmp_behavior();
            double worst = 0.0;
            for (int x = 0; x < 2; ++x)
              for (int y = 0; y < 2; ++y) {
                double sum = 0.0;
                for (int a = 0; a < 3; ++a)
                  for (int bo = 0; bo < 3; ++bo) sum += b(x, y, a, bo).to_double();
                worst = std::max(worst, std::abs(sum - 1.0));
              }
            const auto ns = is_no_signaling(b, 1e-12);
            r.computed = "normalization " + fmt(worst, 3) + ", signaling " + fmt(ns.max_violation, 3);
            return worst <= 1e-12 && ns.no_signaling;
          });

  run.run("N_2 x N_2 with P_2 x P_2, two bits", "success 1/1, alpha 1 on 16 inputs",
          "reference result", "exact", [&](CheckResult& r) {
            const auto c = tensor_channels(make_Nm(2), make_Nm(2));
            const auto box = tensor_behaviors(make_extremal_box(2, 2), make_extremal_box(2, 2));
            const auto p = tensor_protocols(make_theorem2_protocol(2), make_theorem2_protocol(2));
            const Scalar s = exact_success(c, box, p, uniform_prior(4));
            const auto g = confusability_graph(c);
            const std::size_t alpha = independence_number(g);
            r.computed = s.str() + ", alpha " + std::to_string(alpha) + " on " +
                         std::to_string(g.vertex_count());
            return s == Scalar::one(rational) && is_zero_error(c, box, p) && alpha == 1 &&
                   g.vertex_count() == 16;
          });
  run.run("strong product matches the product channel", "identical graphs", "derived oracle",
          "exact", [&](CheckResult& r) {
            const auto g = make_Nm(2);
            const bool ok = strong_product(confusability_graph(g), confusability_graph(g)) ==
                            confusability_graph(tensor_channels(g, g));
            r.computed = ok ? "identical" : "differs";
            return ok;
          });

  run.run("P_m and R~_m no-signaling, m=2..10", "exact", "derived oracle", "exact",
          [&](CheckResult& r) {
            for (int m = 2; m <= 10; ++m) {
              if (!is_no_signaling(make_extremal_box(m, m)).no_signaling ||
                  !is_no_signaling(make_rtilde_box(m)).no_signaling) {
                r.detail = "m=" + std::to_string(m);
                r.computed = "signaling";
                return false;
              }
            }
            r.computed = "no-signaling";
            return true;
          });

  run.run("Monte Carlo, N_3 with P_3", "every one of 100000 trials succeeds", "reference theorem",
          "float", [&](CheckResult& r) {
            const auto mc = monte_carlo_success(make_Nm(3), make_extremal_box(3, 3),
                                                make_theorem2_protocol(3), uniform_prior(2),
                                                100000, 1);
            r.computed = std::to_string(mc.successes) + "/" + std::to_string(mc.trials);
            return mc.successes == mc.trials;
          });
  run.run("Monte Carlo, N_3 with CGLMP", "0.9008 +- 0.0012 over 10^6 trials", "reference value",
          "float", [&](CheckResult& r) {
            const auto mc = monte_carlo_success(convert(make_Nm(3), NumericMode::floating),
                                                make_cglmp_behavior(), make_theorem2_protocol(3),
                                                uniform_prior(2, NumericMode::floating), 1000000, 1);
            r.computed = fmt(mc.estimate, 6) + " +- " + fmt(mc.std_error, 2);
            return std::abs(mc.estimate - 0.9008) <= 0.0012 &&
                   std::abs(mc.estimate - cglmp_closed) <= 4 * mc.std_error;
          });

  if (options.slow) {
    run.run("exhaustive search, N_2 with P_2, 2 messages", "zero-error protocol found",
            "reference theorem", "exact", [&](CheckResult& r) {
              const auto c = make_Nm(2);
              const auto box = make_extremal_box(2, 2);
              const auto found = exhaustive_assisted_search(c, box, 2);
              r.computed = found.found() ? "found" : "none";
              r.detail = std::to_string(found.encoders_examined) + " of " +
                         std::to_string(found.encoders_total) + " encoders";
              return found.found() && is_zero_error(c, box, *found.protocol);
            });
    run.run("exhaustive search, N_2 with a trivial box", "no zero-error protocol",
            "reference result", "exact", [&](CheckResult& r) {
              const auto found = exhaustive_assisted_search(make_Nm(2), make_trivial_box(), 2);
              r.computed = found.found() ? "found" : "none";
              return !found.found();
            });
  }
  return report;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"provenance", c.provenance},
                      {"computed", c.computed},
                      {"mode", c.mode},
                      {"pass", c.pass},
                      {"seconds", c.seconds},
                      {"detail", c.detail}});
  }
  Json j;
  j["passed"] = report.all_passed();
  j["checks"] = std::move(checks);
  return j;
}

std::string report_table(const VerificationReport& report) {
  std::size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  os << std::left << std::setw(6) << "STATUS" << "  " << std::setw(static_cast<int>(width))
     << "CHECK" << "  " << std::setw(6) << "MODE" << "  " << std::setw(9) << "SECONDS"
     << "COMPUTED / EXPECTED\n";
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass;
    os << std::left << std::setw(6) << (c.pass ? "pass" : "FAIL") << "  "
       << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(6) << c.mode << "  "
       << std::setw(9) << std::fixed << std::setprecision(3) << c.seconds << c.computed << " / "
       << c.expected << " [" << c.provenance << "]\n";
    os.unsetf(std::ios::fixed);
    if (!c.detail.empty() && !c.pass) os << "        " << c.detail << "\n";
  }
  os << passed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace zerocap
