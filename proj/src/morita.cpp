#include "lpa/morita.hpp"

#include <stdexcept>

namespace lpa {
namespace {

void require_condition_I(const QuiverRep& r, const char* who) {
  ConditionIResult res = check_condition_I(r);
  if (!res.ok)
    throw std::invalid_argument(std::string(who) + " requires condition (I): " + res.describe());
}

void assert_condition_I(const QuiverRep& r, const char* who) {
  ConditionIResult res = check_condition_I(r);
  if (!res.ok)
    throw std::logic_error(std::string(who) + " broke condition (I): " + res.describe());
}

void require_replay(const Digraph& pre, const ReductionStep& step, const Digraph& post,
                    const char* who) {
  if (!(apply_step(pre, step) == post))
    throw std::invalid_argument(std::string(who) +
                                ": pre-step graph does not replay onto the anchor graph");
}

// Row offset of the g-summand inside the eliminated vertex's reconstructed
// space, which concatenates dims(t(g)) over out-arrows g sorted by id.
std::size_t summand_offset(const Digraph& pre, const QuiverRep& post_rep, const std::string& v,
                           const std::string& h) {
  std::size_t off = 0;
  for (const std::string& g : pre.out_arrows(v)) {
    if (g == h) return off;
    off += post_rep.dim(pre.arrow(g).target);
  }
  throw std::logic_error("arrow is not an out-arrow of the eliminated vertex");
}

}  // namespace

QuiverRep forward(const QuiverRep& r, const ReductionStep& step) {
  require_condition_I(r, "forward transport");
  Digraph next = apply_step(r.graph(), step);
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : next.vertices()) dims[v] = r.dim(v);
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : next.arrows()) {
    auto it = step.new_arrows.find(a.id);
    if (it == step.new_arrows.end())
      mats.emplace(a.id, r.arrow_matrix(a.id));
    else
      mats.emplace(a.id, r.arrow_matrix(it->second.in_arrow) * r.arrow_matrix(it->second.out_arrow));
  }
  QuiverRep out(std::move(next), r.field(), std::move(dims), std::move(mats));
  assert_condition_I(out, "forward transport");
  return out;
}

QuiverRep backward(const QuiverRep& r, const ReductionStep& step, const Digraph& pre) {
  require_condition_I(r, "backward transport");
  require_replay(pre, step, r.graph(), "backward transport");
  const std::string& v = step.eliminated;
  std::map<std::string, std::size_t> dims;
  for (const std::string& w : r.graph().vertices()) dims[w] = r.dim(w);
  std::size_t dv = 0;
  for (const std::string& g : pre.out_arrows(v)) dv += r.dim(pre.arrow(g).target);
  dims[v] = dv;
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : pre.arrows()) {
    if (a.target == v) {
      std::vector<Matrix> blocks;
      for (const std::string& g : pre.out_arrows(v))
        blocks.push_back(r.arrow_matrix(a.id + "*" + g));
      mats.emplace(a.id, Matrix::hstack(r.field(), dims[a.source], blocks));
    } else if (a.source == v) {
      Matrix proj(r.field(), dv, r.dim(a.target));
      std::size_t off = summand_offset(pre, r, v, a.id);
      for (std::size_t i = 0; i < proj.cols(); ++i)
        proj.set(off + i, i, r.field().one());
      mats.emplace(a.id, std::move(proj));
    } else {
      mats.emplace(a.id, r.arrow_matrix(a.id));
    }
  }
  QuiverRep out(pre, r.field(), std::move(dims), std::move(mats));
  assert_condition_I(out, "backward transport");
  return out;
}

RepMorphism forward(const RepMorphism& m, const ReductionStep& step) {
  QuiverRep src = forward(m.source(), step);
  QuiverRep tgt = forward(m.target(), step);
  std::map<std::string, Matrix> maps;
  for (const std::string& w : src.graph().vertices()) maps.emplace(w, m.at(w));
  return RepMorphism(std::move(src), std::move(tgt), std::move(maps));
}

RepMorphism backward(const RepMorphism& m, const ReductionStep& step, const Digraph& pre) {
  QuiverRep src = backward(m.source(), step, pre);
  QuiverRep tgt = backward(m.target(), step, pre);
  const std::string& v = step.eliminated;
  std::map<std::string, Matrix> maps;
  for (const std::string& w : pre.vertices()) {
    if (w == v) {
      std::vector<Matrix> blocks;
      for (const std::string& g : pre.out_arrows(v)) blocks.push_back(m.at(pre.arrow(g).target));
      maps.emplace(w, Matrix::block_diag(m.source().field(), blocks));
    } else {
      maps.emplace(w, m.at(w));
    }
  }
  return RepMorphism(std::move(src), std::move(tgt), std::move(maps));
}

RepMorphism canonical_iso(const QuiverRep& r, const ReductionStep& step) {
  QuiverRep round_trip = backward(forward(r, step), step, r.graph());
  const std::string& v = step.eliminated;
  std::map<std::string, Matrix> maps;
  for (const std::string& w : r.graph().vertices()) {
    if (w == v) {
      std::vector<Matrix> blocks;
      for (const std::string& e : r.graph().out_arrows(v)) blocks.push_back(r.arrow_matrix(e));
      maps.emplace(w, Matrix::hstack(r.field(), r.dim(v), blocks));
    } else {
      maps.emplace(w, Matrix::identity(r.field(), r.dim(w)));
    }
  }
  return RepMorphism(r, std::move(round_trip), std::move(maps));
}

QuiverRep transport(const QuiverRep& r, const ReductionTrace& trace, TransportDirection dir) {
  std::vector<Digraph> snaps = trace.snapshots();
  if (dir == TransportDirection::forward) {
    if (!(r.graph() == trace.initial))
      throw std::invalid_argument("forward transport: rep is not anchored at the initial graph");
    QuiverRep cur = r;
    for (const ReductionStep& s : trace.steps) cur = forward(cur, s);
    return cur;
  }
  if (!(r.graph() == trace.final))
    throw std::invalid_argument("backward transport: rep is not anchored at the final graph");
  QuiverRep cur = r;
  for (std::size_t i = trace.steps.size(); i-- > 0;)
    cur = backward(cur, trace.steps[i], snaps[i]);
  return cur;
}

RepMorphism transport(const RepMorphism& m, const ReductionTrace& trace, TransportDirection dir) {
  std::vector<Digraph> snaps = trace.snapshots();
  if (dir == TransportDirection::forward) {
    if (!(m.source().graph() == trace.initial))
      throw std::invalid_argument(
          "forward transport: morphism is not anchored at the initial graph");
    RepMorphism cur = m;
    for (const ReductionStep& s : trace.steps) cur = forward(cur, s);
    return cur;
  }
  if (!(m.source().graph() == trace.final))
    throw std::invalid_argument("backward transport: morphism is not anchored at the final graph");
  RepMorphism cur = m;
  for (std::size_t i = trace.steps.size(); i-- > 0;)
    cur = backward(cur, trace.steps[i], snaps[i]);
  return cur;
}

}  // namespace lpa
