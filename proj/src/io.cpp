#include "lpa/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace lpa::io {

namespace {

const json& need(const json& j, const char* key, const char* doc) {
  if (!j.is_object())
    throw ParseError(std::string(doc) + " document must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(doc) + " document is missing field '" + key + "'");
  return *it;
}

std::string need_string(const json& j, const char* key, const char* doc) {
  const json& v = need(j, key, doc);
  if (!v.is_string())
    throw ParseError(std::string(doc) + " field '" + key + "' must be a string");
  return v.get<std::string>();
}

const json& need_array(const json& j, const char* key, const char* doc) {
  const json& v = need(j, key, doc);
  if (!v.is_array())
    throw ParseError(std::string(doc) + " field '" + key + "' must be an array");
  return v;
}

const json& need_object(const json& j, const char* key, const char* doc) {
  const json& v = need(j, key, doc);
  if (!v.is_object())
    throw ParseError(std::string(doc) + " field '" + key + "' must be an object");
  return v;
}

bool json_uint(const json& v, std::uint64_t& out) {
  if (v.is_number_unsigned()) {
    out = v.get<std::uint64_t>();
    return true;
  }
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    return true;
  }
  return false;
}

std::uint64_t need_uint(const json& j, const char* key, const char* doc) {
  std::uint64_t out;
  if (!json_uint(need(j, key, doc), out))
    throw ParseError(std::string(doc) + " field '" + key + "' must be a nonnegative integer");
  return out;
}

void check_header(const json& j, const char* type) {
  if (need_uint(j, "schema", type) != static_cast<std::uint64_t>(kSchemaVersion))
    throw ParseError(std::string(type) + " document has an unsupported schema version");
  if (need_string(j, "type", type) != type)
    throw ParseError(std::string("expected a '") + type + "' document, got type '" +
                     need_string(j, "type", type) + "'");
}

json header(const char* type) {
  json j = json::object();
  j["schema"] = kSchemaVersion;
  j["type"] = type;
  return j;
}

// sign, decimal digits, and for rationals optionally "/digits"
bool is_decimal(const std::string& s, bool allow_slash) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (!allow_slash || s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

std::string graph_hash(const Digraph& g) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const std::string& v : g.vertices()) {
    mix("v");
    mix(v);
  }
  for (const Arrow& a : g.arrows()) {
    mix("a");
    mix(a.id);
    mix(a.source);
    mix(a.target);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json digraph_to_json(const Digraph& g) {
  json j = header("digraph");
  j["vertices"] = g.vertices();
  json arrows = json::array();
  for (const Arrow& a : g.arrows())
    arrows.push_back({{"id", a.id}, {"src", a.source}, {"tgt", a.target}});
  j["arrows"] = arrows;
  return j;
}

Digraph digraph_from_json(const json& j, bool permissive) {
  check_header(j, "digraph");
  std::vector<std::string> vertices;
  for (const json& v : need_array(j, "vertices", "digraph")) {
    if (!v.is_string()) throw ParseError("digraph vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  for (const json& a : need_array(j, "arrows", "digraph"))
    arrows.push_back(
        {need_string(a, "id", "arrow"), need_string(a, "src", "arrow"), need_string(a, "tgt", "arrow")});
  if (!permissive) return Digraph::from_parts(vertices, arrows);
  Digraph g;
  for (const std::string& v : vertices) {
    if (v.empty()) throw std::invalid_argument("empty vertex id");
    g.add_vertex(v);
  }
  for (const Arrow& a : arrows) {
    if (a.id.empty()) throw std::invalid_argument("empty arrow id");
    g.add_arrow(a.id, a.source, a.target);
  }
  return g;
}

json field_to_json(const Field& f) {
  if (f.is_rationals()) return json("Q");
  return json{{"GF", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("field must be \"Q\" or {\"GF\": p}");
  }
  if (j.is_object() && j.size() == 1 && j.contains("GF")) {
    std::uint64_t p;
    if (!json_uint(j.at("GF"), p) || p >= (1ull << 31))
      throw ParseError("GF modulus must be a nonnegative integer below 2^31");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("field must be \"Q\" or {\"GF\": p}");
}

json scalar_to_json(const Field& f, const Scalar& s) {
  if (!f.is_rationals()) return json(s.get_num().get_si());
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return json(s.get_num().get_si());
  if (s.get_den() == 1) return json(s.get_num().get_str());
  return json(s.get_num().get_str() + "/" + s.get_den().get_str());
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.reduce(Scalar(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!is_decimal(s, f.is_rationals()))
      throw std::invalid_argument("malformed scalar '" + s + "'");
    Scalar v(s, 10);
    if (v.get_den() == 0) throw std::invalid_argument("scalar '" + s + "' has denominator 0");
    v.canonicalize();
    return f.reduce(v);
  }
  throw ParseError("scalar entries must be integers or strings");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, std::size_t rows, std::size_t cols, const json& j) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError("matrix must be an array of " + std::to_string(rows) + " rows");
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw ParseError("matrix rows must be arrays of " + std::to_string(cols) + " entries");
    for (const json& e : row) entries.push_back(scalar_from_json(f, e));
  }
  return Matrix(f, rows, cols, std::move(entries));
}

json rep_to_json(const QuiverRep& r) {
  json j = header("quiver_rep");
  j["graph"] = graph_hash(r.graph());
  j["field"] = field_to_json(r.field());
  json dims = json::object();
  for (const std::string& v : r.graph().vertices()) dims[v] = r.dim(v);
  j["dims"] = dims;
  json arrows = json::object();
  for (const Arrow& a : r.graph().arrows()) arrows[a.id] = matrix_to_json(r.arrow_matrix(a.id));
  j["arrows"] = arrows;
  return j;
}

QuiverRep rep_from_json(const Digraph& g, const json& j) {
  check_header(j, "quiver_rep");
  if (need_string(j, "graph", "quiver_rep") != graph_hash(g))
    throw std::invalid_argument("representation is anchored to a different graph (hash mismatch)");
  Field f = field_from_json(need(j, "field", "quiver_rep"));
  const json& jd = need_object(j, "dims", "quiver_rep");
  std::map<std::string, std::size_t> dims;
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    std::uint64_t n;
    if (!json_uint(it.value(), n))
      throw ParseError("dimension of '" + it.key() + "' must be a nonnegative integer");
    dims[it.key()] = static_cast<std::size_t>(n);
  }
  const json& ja = need_object(j, "arrows", "quiver_rep");
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : g.arrows()) {
    auto it = ja.find(a.id);
    if (it == ja.end()) throw std::invalid_argument("missing matrix for arrow '" + a.id + "'");
    auto rt = dims.find(a.source);
    auto ct = dims.find(a.target);
    if (rt == dims.end() || ct == dims.end())
      throw std::invalid_argument("arrow '" + a.id + "' references a vertex without a dimension");
    mats.emplace(a.id, matrix_from_json(f, rt->second, ct->second, *it));
  }
  if (ja.size() != g.arrows().size())
    throw std::invalid_argument("representation lists a matrix for an unknown arrow");
  return QuiverRep(g, f, std::move(dims), std::move(mats));
}

json invariants_to_json(const ModuleInvariants& inv) {
  json j = header("module_invariants");
  j["graph"] = graph_hash(inv.graph);
  j["field"] = field_to_json(inv.field);
  json sinks = json::array();
  for (const SinkSummand& s : inv.sinks)
    sinks.push_back({{"sink", s.sink}, {"mult", s.multiplicity}});
  j["sinks"] = sinks;
  json cycles = json::array();
  for (const CycleSummand& c : inv.cycles) {
    json f = json::array();
    for (const Scalar& coeff : c.f.coeffs()) f.push_back(scalar_to_json(inv.field, coeff));
    cycles.push_back({{"cycle", c.cycle.arrows()}, {"f", f}, {"n", c.n}, {"mult", c.multiplicity}});
  }
  j["cycles"] = cycles;
  return j;
}

ModuleInvariants invariants_from_json(const Digraph& g, const json& j) {
  check_header(j, "module_invariants");
  if (need_string(j, "graph", "module_invariants") != graph_hash(g))
    throw std::invalid_argument("invariants are anchored to a different graph (hash mismatch)");
  ModuleInvariants inv{g, field_from_json(need(j, "field", "module_invariants")), {}, {}};
  for (const json& s : need_array(j, "sinks", "module_invariants")) {
    std::uint64_t mult = need_uint(s, "mult", "sink summand");
    inv.sinks.push_back({need_string(s, "sink", "sink summand"), static_cast<std::size_t>(mult)});
  }
  for (const json& c : need_array(j, "cycles", "module_invariants")) {
    std::vector<std::string> arrows;
    for (const json& a : need_array(c, "cycle", "cycle summand")) {
      if (!a.is_string()) throw ParseError("cycle arrow ids must be strings");
      arrows.push_back(a.get<std::string>());
    }
    std::vector<Scalar> coeffs;
    for (const json& e : need_array(c, "f", "cycle summand"))
      coeffs.push_back(scalar_from_json(inv.field, e));
    std::uint64_t n = need_uint(c, "n", "cycle summand");
    std::uint64_t mult = need_uint(c, "mult", "cycle summand");
    if (n > 0xffffffffull) throw ParseError("cycle summand power is out of range");
    inv.cycles.push_back({Cycle(g, arrows), Poly(inv.field, coeffs),
                          static_cast<unsigned>(n), static_cast<std::size_t>(mult)});
  }
  return inv;
}

json trace_to_json(const ReductionTrace& t) {
  json j = header("reduction_trace");
  j["initial"] = digraph_to_json(t.initial);
  json steps = json::array();
  for (const ReductionStep& s : t.steps) {
    json news = json::array();
    for (const auto& [id, origin] : s.new_arrows)
      news.push_back({{"id", id}, {"in", origin.in_arrow}, {"out", origin.out_arrow}});
    steps.push_back({{"eliminated", s.eliminated}, {"new_arrows", news}, {"removed", s.removed}});
  }
  j["steps"] = steps;
  j["final"] = digraph_to_json(t.final);
  return j;
}

ReductionTrace trace_from_json(const json& j) {
  check_header(j, "reduction_trace");
  ReductionTrace t;
  t.initial = digraph_from_json(need(j, "initial", "reduction_trace"), /*permissive=*/true);
  for (const json& s : need_array(j, "steps", "reduction_trace")) {
    ReductionStep step;
    step.eliminated = need_string(s, "eliminated", "reduction step");
    for (const json& a : need_array(s, "new_arrows", "reduction step"))
      step.new_arrows[need_string(a, "id", "new arrow")] = {need_string(a, "in", "new arrow"),
                                                            need_string(a, "out", "new arrow")};
    for (const json& r : need_array(s, "removed", "reduction step")) {
      if (!r.is_string()) throw ParseError("removed arrow ids must be strings");
      step.removed.push_back(r.get<std::string>());
    }
    t.steps.push_back(std::move(step));
  }
  Digraph cur = t.initial;
  for (const ReductionStep& step : t.steps) cur = apply_step(cur, step);
  t.final = digraph_from_json(need(j, "final", "reduction_trace"), /*permissive=*/true);
  if (!(cur == t.final))
    throw std::invalid_argument("trace steps do not replay to the recorded final graph");
  return t;
}

json dimension_function_to_json(const Digraph& g, const DimensionFunction& d) {
  json j = header("dimension_function");
  j["graph"] = graph_hash(g);
  json values = json::object();
  for (const auto& [v, n] : d)
    values[v] = n.fits_slong_p() ? json(n.get_si()) : json(n.get_str());
  j["values"] = values;
  return j;
}

DimensionFunction dimension_function_from_json(const Digraph& g, const json& j) {
  check_header(j, "dimension_function");
  if (need_string(j, "graph", "dimension_function") != graph_hash(g))
    throw std::invalid_argument(
        "dimension function is anchored to a different graph (hash mismatch)");
  DimensionFunction d;
  const json& values = need_object(j, "values", "dimension_function");
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it.value().is_number_integer()) {
      d[it.key()] = mpz_class(static_cast<long>(it.value().get<std::int64_t>()));
    } else if (it.value().is_string() && is_decimal(it.value().get<std::string>(), false)) {
      d[it.key()] = mpz_class(it.value().get<std::string>(), 10);
    } else {
      throw ParseError("dimension values must be integers or decimal strings");
    }
  }
  for (const std::string& v : g.vertices())
    if (!d.count(v)) throw std::invalid_argument("dimension function is missing vertex '" + v + "'");
  if (d.size() != g.vertices().size())
    throw std::invalid_argument("dimension function lists an unknown vertex");
  return d;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
}

}  // namespace lpa::io
