#include "lpa/quiverrep.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {
namespace {

void throw_joined(const std::string& what, const std::vector<std::string>& issues) {
  if (issues.empty()) return;
  std::ostringstream msg;
  msg << what << ":";
  for (const std::string& s : issues) msg << "\n  " << s;
  throw std::invalid_argument(msg.str());
}

}  // namespace

QuiverRep::QuiverRep(Digraph graph, Field field, std::map<std::string, std::size_t> dims,
                     std::map<std::string, Matrix> arrow_matrices)
    : graph_(std::move(graph)),
      field_(std::move(field)),
      dims_(std::move(dims)),
      arrows_(std::move(arrow_matrices)) {
  std::vector<std::string> issues;
  for (const std::string& v : graph_.vertices())
    if (!dims_.count(v)) issues.push_back("missing dimension for vertex '" + v + "'");
  for (const auto& [v, n] : dims_)
    if (!graph_.has_vertex(v)) issues.push_back("dimension for unknown vertex '" + v + "'");
  for (const Arrow& a : graph_.arrows()) {
    auto it = arrows_.find(a.id);
    if (it == arrows_.end()) {
      issues.push_back("missing matrix for arrow '" + a.id + "'");
      continue;
    }
    const Matrix& m = it->second;
    if (!(m.field() == field_)) {
      issues.push_back("matrix for arrow '" + a.id + "' is over the wrong field");
      continue;
    }
    std::size_t want_r = dims_.count(a.source) ? dims_.at(a.source) : 0;
    std::size_t want_c = dims_.count(a.target) ? dims_.at(a.target) : 0;
    if (m.rows() != want_r || m.cols() != want_c) {
      std::ostringstream s;
      s << "matrix for arrow '" << a.id << "' has shape " << m.rows() << "x" << m.cols()
        << ", expected " << want_r << "x" << want_c;
      issues.push_back(s.str());
    }
  }
  for (const auto& [id, m] : arrows_)
    if (!graph_.has_arrow(id)) issues.push_back("matrix for unknown arrow '" + id + "'");
  throw_joined("invalid representation", issues);
}

QuiverRep QuiverRep::zero(const Digraph& g, const Field& f) {
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : g.vertices()) dims[v] = 0;
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : g.arrows()) mats.emplace(a.id, Matrix(f, 0, 0));
  return QuiverRep(g, f, std::move(dims), std::move(mats));
}

std::size_t QuiverRep::dim(const std::string& v) const {
  auto it = dims_.find(v);
  if (it == dims_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
  return it->second;
}

const Matrix& QuiverRep::arrow_matrix(const std::string& id) const {
  auto it = arrows_.find(id);
  if (it == arrows_.end()) throw std::invalid_argument("unknown arrow '" + id + "'");
  return it->second;
}

std::size_t QuiverRep::total_dimension() const {
  std::size_t n = 0;
  for (const auto& [v, d] : dims_) n += d;
  return n;
}

Matrix QuiverRep::path_action(const Path& p) const {
  Matrix m = Matrix::identity(field_, dim(p.source()));
  for (const std::string& a : p.arrows()) m = m * arrow_matrix(a);
  return m;
}

std::string ConditionIResult::describe() const {
  if (ok) return "condition (I) holds";
  std::ostringstream s;
  s << "condition (I) fails at '" << vertex << "': out-arrow block is " << rows << "x" << cols
    << " with rank " << rank;
  return s.str();
}

ConditionIResult check_condition_I(const QuiverRep& r) {
  for (const std::string& v : r.graph().vertices()) {
    if (r.graph().is_sink(v)) continue;
    std::vector<Matrix> blocks;
    for (const std::string& a : r.graph().out_arrows(v)) blocks.push_back(r.arrow_matrix(a));
    Matrix block = Matrix::hstack(r.field(), r.dim(v), blocks);
    std::size_t rank = block.rank();
    if (block.rows() != block.cols() || rank != block.rows())
      return {false, v, block.rows(), block.cols(), rank};
  }
  return {true, "", 0, 0, 0};
}

Digraph support_subgraph(const QuiverRep& r) {
  std::set<std::string> keep;
  for (const auto& [v, d] : r.dims())
    if (d > 0) keep.insert(v);
  return r.graph().induced_subgraph(keep);
}

QuiverRep restrict_to(const QuiverRep& r, const Digraph& sub) {
  std::set<std::string> keep(sub.vertices().begin(), sub.vertices().end());
  for (const std::string& v : sub.vertices())
    if (!r.graph().has_vertex(v))
      throw std::invalid_argument("subgraph vertex '" + v + "' is not in the host graph");
  if (!(r.graph().induced_subgraph(keep) == sub))
    throw std::invalid_argument("restriction target is not an induced subgraph");
  for (const std::string& v : r.graph().vertices())
    if (!keep.count(v) && r.dim(v) > 0)
      throw std::invalid_argument("restriction drops vertex '" + v + "' of nonzero dimension");
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : sub.vertices()) dims[v] = r.dim(v);
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : sub.arrows()) mats.emplace(a.id, r.arrow_matrix(a.id));
  return QuiverRep(sub, r.field(), std::move(dims), std::move(mats));
}

DimensionFunction dimension_function_of(const QuiverRep& r) {
  ConditionIResult res = check_condition_I(r);
  if (!res.ok) throw std::invalid_argument(res.describe());
  DimensionFunction d;
  for (const auto& [v, n] : r.dims()) d[v] = static_cast<unsigned long>(n);
  return d;
}

QuiverRep direct_sum(const std::vector<QuiverRep>& rs) {
  if (rs.empty()) throw std::invalid_argument("direct sum needs at least one summand");
  const Digraph& g = rs[0].graph();
  const Field& f = rs[0].field();
  for (const QuiverRep& r : rs) {
    if (!(r.graph() == g)) throw std::invalid_argument("direct sum summands disagree on graph");
    if (!(r.field() == f)) throw std::invalid_argument("direct sum summands disagree on field");
  }
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : g.vertices()) {
    std::size_t n = 0;
    for (const QuiverRep& r : rs) n += r.dim(v);
    dims[v] = n;
  }
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : g.arrows()) {
    std::vector<Matrix> blocks;
    for (const QuiverRep& r : rs) blocks.push_back(r.arrow_matrix(a.id));
    mats.emplace(a.id, Matrix::block_diag(f, blocks));
  }
  return QuiverRep(g, f, std::move(dims), std::move(mats));
}

RepMorphism::RepMorphism(QuiverRep source, QuiverRep target,
                         std::map<std::string, Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(vertex_maps)) {
  if (!(source_.graph() == target_.graph()))
    throw std::invalid_argument("morphism endpoints live on different graphs");
  if (!(source_.field() == target_.field()))
    throw std::invalid_argument("morphism endpoints live over different fields");
  std::vector<std::string> issues;
  for (const std::string& v : source_.graph().vertices()) {
    auto it = maps_.find(v);
    if (it == maps_.end()) {
      issues.push_back("missing vertex map at '" + v + "'");
      continue;
    }
    const Matrix& m = it->second;
    if (!(m.field() == source_.field()))
      issues.push_back("vertex map at '" + v + "' is over the wrong field");
    else if (m.rows() != source_.dim(v) || m.cols() != target_.dim(v)) {
      std::ostringstream s;
      s << "vertex map at '" << v << "' has shape " << m.rows() << "x" << m.cols() << ", expected "
        << source_.dim(v) << "x" << target_.dim(v);
      issues.push_back(s.str());
    }
  }
  for (const auto& [v, m] : maps_)
    if (!source_.graph().has_vertex(v)) issues.push_back("vertex map for unknown vertex '" + v + "'");
  throw_joined("invalid morphism", issues);
}

RepMorphism RepMorphism::identity(const QuiverRep& r) {
  std::map<std::string, Matrix> maps;
  for (const std::string& v : r.graph().vertices())
    maps.emplace(v, Matrix::identity(r.field(), r.dim(v)));
  return RepMorphism(r, r, std::move(maps));
}

RepMorphism RepMorphism::zero(const QuiverRep& source, const QuiverRep& target) {
  std::map<std::string, Matrix> maps;
  for (const std::string& v : source.graph().vertices())
    maps.emplace(v, Matrix(source.field(), source.dim(v), target.dim(v)));
  return RepMorphism(source, target, std::move(maps));
}

const Matrix& RepMorphism::at(const std::string& v) const {
  auto it = maps_.find(v);
  if (it == maps_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
  return it->second;
}

RepMorphism RepMorphism::composed(const RepMorphism& then) const {
  if (!(then.source_ == target_))
    throw std::invalid_argument("composition endpoints do not match");
  std::map<std::string, Matrix> maps;
  for (const auto& [v, m] : maps_) maps.emplace(v, m * then.at(v));
  return RepMorphism(source_, then.target_, std::move(maps));
}

MorphismCheck check_morphism(const RepMorphism& m) {
  MorphismCheck out{true, {}};
  const QuiverRep& a = m.source();
  const QuiverRep& b = m.target();
  for (const Arrow& e : a.graph().arrows()) {
    Matrix lhs = m.at(e.source) * b.arrow_matrix(e.id);
    Matrix rhs = a.arrow_matrix(e.id) * m.at(e.target);
    if (!(lhs == rhs)) {
      out.ok = false;
      out.violations.push_back("arrow '" + e.id + "' breaks the intertwining law");
    }
  }
  return out;
}

bool is_isomorphism(const RepMorphism& m) {
  if (!check_morphism(m).ok) return false;
  for (const auto& [v, mat] : m.vertex_maps())
    if (!mat.is_invertible()) return false;
  return true;
}

NoExitCheck no_exit_support_check(const QuiverRep& r) {
  Digraph s = support_subgraph(r);
  for (const Cycle& c : simple_cycles(s)) {
    std::vector<std::string> exits = cycle_exits(s, c);
    if (!exits.empty()) return {false, c, exits[0]};
  }
  return {true, std::nullopt, ""};
}

}  // namespace lpa
