#include "zerocap/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace zerocap {

namespace {

[[noreturn]] void fail(const std::string& message) { throw FormatError(message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

NumericMode mode_field(const Json& j) {
  const Json& m = field(j, "mode");
  if (!m.is_string()) fail("\"mode\" must be a string");
  try {
    return parse_mode(m.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json space_to_json(const IndexSpace& s) {
  Json j;
  j["factors"] = s.factors();
  if (std::any_of(s.offsets().begin(), s.offsets().end(), [](int o) { return o != 0; })) {
    j["offsets"] = s.offsets();
  }
  return j;
}

IndexSpace space_from_json(const Json& j) {
  std::vector<int> factors = int_list(field(j, "factors"), "factors");
  std::vector<int> offsets;
  if (j.contains("offsets")) offsets = int_list(j.at("offsets"), "offsets");
  try {
    return IndexSpace(std::move(factors), std::move(offsets));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, int dim, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim)) {
    fail(what + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) fail(what + " row has the wrong length");
    for (int c = 0; c < dim; ++c) {
      const Json& z = row[c];
      if (z.is_number()) {
        m(r, c) = {z.get<double>(), 0.0};
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        m(r, c) = {z[0].get<double>(), z[1].get<double>()};
      } else {
        fail(what + " entries must be [re, im] pairs");
      }
    }
  }
  return m;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.str();
  return s.to_double();
}

Scalar scalar_from_json(const Json& j, NumericMode mode) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
    if (j.is_number_integer() && mode == NumericMode::rational) {
      return Scalar::rational(j.get<long>(), 1);
    }
    if (j.is_number() && mode == NumericMode::floating) return Scalar::floating(j.get<double>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  fail("expected a " + std::string(to_string(mode)) + " value, got " + j.dump());
}

Json behavior_to_json(const Behavior& b) {
  const auto& s = b.scenario();
  Json p = Json::array();
  for (int x = 0; x < s.x_card; ++x) {
    Json px = Json::array();
    for (int y = 0; y < s.y_card; ++y) {
      Json py = Json::array();
      for (int a = 0; a < s.a_card; ++a) {
        Json pa = Json::array();
        for (int bo = 0; bo < s.b_card; ++bo) pa.push_back(scalar_to_json(b(x, y, a, bo)));
        py.push_back(std::move(pa));
      }
      px.push_back(std::move(py));
    }
    p.push_back(std::move(px));
  }
  Json j;
  j["scenario"] = {{"x", s.x_card}, {"y", s.y_card}, {"a", s.a_card}, {"b", s.b_card}};
  j["mode"] = std::string(to_string(b.mode()));
  j["p"] = std::move(p);
  return j;
}

Behavior behavior_from_json(const Json& j) {
  const Json& sj = field(j, "scenario");
  const Scenario s{int_field(sj, "x"), int_field(sj, "y"), int_field(sj, "a"), int_field(sj, "b")};
  try {
    s.check();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const NumericMode mode = mode_field(j);
  const Json& p = field(j, "p");
  std::vector<Scalar> table(s.size());
  auto expect = [](const Json& v, int n, const char* level) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(n)) {
      fail(std::string("\"p\" has the wrong length at level ") + level);
    }
  };
  expect(p, s.x_card, "x");
  for (int x = 0; x < s.x_card; ++x) {
    expect(p[x], s.y_card, "y");
    for (int y = 0; y < s.y_card; ++y) {
      expect(p[x][y], s.a_card, "a");
      for (int a = 0; a < s.a_card; ++a) {
        expect(p[x][y][a], s.b_card, "b");
        for (int b = 0; b < s.b_card; ++b) {
          table[s.index(x, y, a, b)] = scalar_from_json(p[x][y][a][b], mode);
        }
      }
    }
  }
  return Behavior(s, std::move(table));
}

Json channel_to_json(const Channel& c) {
  Json matrix = Json::array();
  for (std::size_t in = 0; in < c.input_count(); ++in) {
    Json column = Json::array();
    for (const auto& p : c.column(in)) column.push_back(scalar_to_json(p));
    matrix.push_back(std::move(column));
  }
  Json j;
  j["inputs"] = space_to_json(c.input_space());
  j["outputs"] = space_to_json(c.output_space());
  j["mode"] = std::string(to_string(c.mode()));
  j["matrix"] = std::move(matrix);
  return j;
}

Channel channel_from_json(const Json& j) {
  IndexSpace inputs = space_from_json(field(j, "inputs"));
  IndexSpace outputs = space_from_json(field(j, "outputs"));
  const NumericMode mode = mode_field(j);
  const Json& matrix = field(j, "matrix");
  if (!matrix.is_array()) fail("\"matrix\" must be an array of columns");
  std::vector<std::vector<Scalar>> columns;
  for (const auto& col : matrix) {
    if (!col.is_array()) fail("\"matrix\" columns must be arrays");
    std::vector<Scalar> column;
    for (const auto& v : col) column.push_back(scalar_from_json(v, mode));
    columns.push_back(std::move(column));
  }
  try {
    return make_channel(std::move(inputs), std::move(outputs), columns);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string graph_to_dimacs(const ConfusabilityGraph& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.labels().size(); ++v) {
    os << "c vertex " << v + 1 << " " << g.labels()[v] << "\n";
  }
  os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

ConfusabilityGraph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<ConfusabilityGraph> g;
  std::size_t declared_edges = 0;
  std::size_t line_number = 0;
  std::map<std::size_t, std::string> labels;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") {
      std::string word;
      std::size_t v = 0;
      std::string label;
      if (ls >> word >> v && word == "vertex" && v >= 1 && (ls >> label)) labels[v - 1] = label;
      continue;
    }
    const std::string where = "line " + std::to_string(line_number);
    if (tag == "p") {
      std::string kind;
      std::size_t n = 0;
      if (g || !(ls >> kind >> n >> declared_edges) || (kind != "edge" && kind != "col")) {
        fail(where + ": bad problem line");
      }
      g.emplace(n);
    } else if (tag == "e") {
      std::size_t u = 0, v = 0;
      if (!g || !(ls >> u >> v)) fail(where + ": bad edge line");
      if (u < 1 || v < 1 || u > g->vertex_count() || v > g->vertex_count() || u == v) {
        fail(where + ": edge endpoints out of range");
      }
      g->add_edge(u - 1, v - 1);
    } else {
      fail(where + ": unknown line type \"" + tag + "\"");
    }
  }
  if (!g) fail("missing \"p edge\" line");
  const std::size_t n = g->vertex_count();
  if (n == 0 || labels.size() != n || labels.rbegin()->first != n - 1) return std::move(*g);
  std::vector<std::string> names;
  for (auto& [v, label] : labels) names.push_back(std::move(label));
  ConfusabilityGraph labelled(n, std::move(names));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g->has_edge(u, v)) labelled.add_edge(u, v);
  return labelled;
}

Json graph_to_json(const ConfusabilityGraph& g) {
  Json adjacency = Json::array();
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    Json row = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) row.push_back(v);
    adjacency.push_back(std::move(row));
  }
  Json j;
  j["vertices"] = g.vertex_count();
  if (!g.labels().empty()) j["labels"] = g.labels();
  j["adjacency"] = std::move(adjacency);
  return j;
}

ConfusabilityGraph graph_from_json(const Json& j) {
  const int n = int_field(j, "vertices");
  if (n < 0) fail("\"vertices\" must be nonnegative");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) fail("label count mismatch");
  ConfusabilityGraph g(n, std::move(labels));
  const Json& adjacency = field(j, "adjacency");
  if (!adjacency.is_array() || adjacency.size() != static_cast<std::size_t>(n)) {
    fail("\"adjacency\" needs one list per vertex");
  }
  for (int u = 0; u < n; ++u) {
    for (int v : int_list(adjacency[u], "adjacency list")) {
      if (v < 0 || v >= n || v == u) fail("adjacency entry out of range");
      g.add_edge(u, v);
    }
  }
  return g;
}

Json capacity_to_json(const CapacityResult& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["capacity_bits"] = r.bits;
  j["exact_bits"] = r.exact_bits ? Json(*r.exact_bits) : Json(nullptr);
  j["complete"] = r.complete;
  return j;
}

Json protocol_to_json(const AssistedProtocol& p) {
  Json j;
  j["messages"] = p.message_count;
  j["box"] = {{"x", p.x_card}, {"y", p.y_card}, {"a", p.a_card}, {"b", p.b_card}};
  j["channel"] = {{"inputs", p.channel_inputs}, {"outputs", p.channel_outputs}};
  j["enc_box_input"] = p.enc_box_input;
  Json enc = Json::array();
  for (int g = 0; g < p.message_count; ++g) {
    enc.push_back(std::vector<int>(p.enc_channel_input.begin() + g * p.a_card,
                                   p.enc_channel_input.begin() + (g + 1) * p.a_card));
  }
  j["enc_channel_input"] = std::move(enc);
  Json dec_y = Json::array();
  Json dec_guess = Json::array();
  for (std::size_t out = 0; out < p.channel_outputs; ++out) {
    const int y = p.dec_box_input[out];
    dec_y.push_back(y == kSkip ? Json(nullptr) : Json(y));
    if (y == kSkip) {
      dec_guess.push_back(p.guess(out, kSkip));
    } else {
      std::vector<int> row;
      for (int b = 0; b < p.b_card; ++b) row.push_back(p.guess(out, b));
      dec_guess.push_back(row);
    }
  }
  j["dec_box_input"] = std::move(dec_y);
  j["dec_guess"] = std::move(dec_guess);
  j["guess_remap"] = p.guess_remap;
  return j;
}

AssistedProtocol protocol_from_json(const Json& j) {
  AssistedProtocol p;
  p.message_count = int_field(j, "messages");
  const Json& box = field(j, "box");
  p.x_card = int_field(box, "x");
  p.y_card = int_field(box, "y");
  p.a_card = int_field(box, "a");
  p.b_card = int_field(box, "b");
  const Json& ch = field(j, "channel");
  const int inputs = int_field(ch, "inputs");
  const int outputs = int_field(ch, "outputs");
  if (inputs < 1 || outputs < 1 || p.message_count < 1 || p.a_card < 1 || p.b_card < 1) {
    fail("protocol sizes must be positive");
  }
  p.channel_inputs = inputs;
  p.channel_outputs = outputs;
  p.enc_box_input = int_list(field(j, "enc_box_input"), "enc_box_input");
  const Json& enc = field(j, "enc_channel_input");
  if (!enc.is_array() || enc.size() != static_cast<std::size_t>(p.message_count)) {
    fail("enc_channel_input needs one row per message");
  }
  for (const auto& row : enc) {
    const auto values = int_list(row, "enc_channel_input row");
    if (values.size() != static_cast<std::size_t>(p.a_card)) fail("enc_channel_input row length");
    p.enc_channel_input.insert(p.enc_channel_input.end(), values.begin(), values.end());
  }
  const Json& dec_y = field(j, "dec_box_input");
  const Json& dec_guess = field(j, "dec_guess");
  if (!dec_y.is_array() || dec_y.size() != p.channel_outputs || !dec_guess.is_array() ||
      dec_guess.size() != p.channel_outputs) {
    fail("decoder tables need one entry per channel output");
  }
  p.dec_box_input.assign(p.channel_outputs, kSkip);
  p.dec_guess.assign(p.channel_outputs * (p.b_card + 1), 0);
  for (std::size_t out = 0; out < p.channel_outputs; ++out) {
    int* guesses = &p.dec_guess[out * (p.b_card + 1)];
    if (dec_y[out].is_null()) {
      if (!dec_guess[out].is_number_integer()) fail("skipped rows take a single guess");
      guesses[p.b_card] = dec_guess[out].get<int>();
      continue;
    }
    if (!dec_y[out].is_number_integer()) fail("dec_box_input entries are integers or null");
    p.dec_box_input[out] = dec_y[out].get<int>();
    const auto row = int_list(dec_guess[out], "dec_guess row");
    if (row.size() != static_cast<std::size_t>(p.b_card)) fail("dec_guess row needs one guess per b");
    std::copy(row.begin(), row.end(), guesses);
  }
  p.guess_remap = int_list(field(j, "guess_remap"), "guess_remap");
  try {
    p.check();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return p;
}

Json success_record(const Scalar& success, std::optional<bool> zero_error, std::size_t branches) {
  Json j;
  j["success"] = scalar_to_json(success);
  j["zero_error"] = zero_error ? Json(*zero_error) : Json(nullptr);
  j["branches"] = branches;
  return j;
}

Json quantum_model_to_json(const QuantumModel& q) {
  auto party = [](const std::vector<std::vector<ComplexMatrix>>& meas) {
    Json inputs = Json::array();
    for (const auto& povm : meas) {
      Json elements = Json::array();
      for (const auto& e : povm) elements.push_back(matrix_to_json(e));
      inputs.push_back(std::move(elements));
    }
    return inputs;
  };
  Json j;
  j["dim_a"] = q.dim_a;
  j["dim_b"] = q.dim_b;
  j["state"] = matrix_to_json(q.state);
  j["alice"] = party(q.alice);
  j["bob"] = party(q.bob);
  return j;
}

QuantumModel quantum_model_from_json(const Json& j) {
  QuantumModel q;
  q.dim_a = int_field(j, "dim_a");
  q.dim_b = int_field(j, "dim_b");
  if (q.dim_a < 1 || q.dim_b < 1 || q.dim_a > kMaxQuantumDimension || q.dim_b > kMaxQuantumDimension) {
    fail("local dimensions must lie in 1..16");
  }
  q.state = matrix_from_json(field(j, "state"), q.dim_a * q.dim_b, "state");
  auto party = [](const Json& inputs, int dim, const char* who) {
    if (!inputs.is_array()) fail(std::string(who) + " must be an array of measurements");
    std::vector<std::vector<ComplexMatrix>> meas;
    for (const auto& povm : inputs) {
      if (!povm.is_array()) fail(std::string(who) + " measurements must be arrays");
      std::vector<ComplexMatrix> elements;
      for (const auto& e : povm) elements.push_back(matrix_from_json(e, dim, who));
      meas.push_back(std::move(elements));
    }
    return meas;
  };
  q.alice = party(field(j, "alice"), q.dim_a, "alice");
  q.bob = party(field(j, "bob"), q.dim_b, "bob");
  return q;
}

std::string behavior_to_csv(const Behavior& b) {
  const auto& s = b.scenario();
  std::ostringstream os;
  os << "x,y,a,b,p\n";
  for (int x = 0; x < s.x_card; ++x)
    for (int y = 0; y < s.y_card; ++y)
      for (int a = 0; a < s.a_card; ++a)
        for (int bo = 0; bo < s.b_card; ++bo)
          os << x << ',' << y << ',' << a << ',' << bo << ',' << b(x, y, a, bo).str() << '\n';
  return os.str();
}

std::string channel_to_csv(const Channel& c) {
  auto label = [](const std::vector<int>& t) {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? " " : "") + std::to_string(t[k]);
    return s;
  };
  std::ostringstream os;
  os << "input,output,p\n";
  for (std::size_t in = 0; in < c.input_count(); ++in)
    for (std::size_t out = 0; out < c.output_count(); ++out)
      os << label(c.input_space().label(in)) << ',' << label(c.output_space().label(out)) << ','
         << c(out, in).str() << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace zerocap
