#include "lpa/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

std::vector<Digraph> ReductionTrace::snapshots() const {
  std::vector<Digraph> out{initial};
  for (const ReductionStep& s : steps) out.push_back(apply_step(out.back(), s));
  return out;
}

bool is_reduced(const Digraph& g) {
  for (const std::string& v : g.vertices())
    if (!g.is_sink(v) && !g.has_loop_at(v)) return false;
  return true;
}

bool is_reducible_at(const Digraph& g, const std::string& v) {
  return g.has_vertex(v) && !g.is_sink(v) && !g.has_loop_at(v);
}

std::pair<Digraph, ReductionStep> reduce_at(const Digraph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
  if (g.is_sink(v)) throw std::invalid_argument("cannot eliminate sink '" + v + "'");
  if (g.has_loop_at(v)) throw std::invalid_argument("cannot eliminate '" + v + "': it has a loop");
  ReductionStep step;
  step.eliminated = v;
  for (const std::string& f : g.in_arrows(v))
    for (const std::string& gg : g.out_arrows(v)) step.new_arrows[f + "*" + gg] = {f, gg};
  step.removed = g.in_arrows(v);
  step.removed.insert(step.removed.end(), g.out_arrows(v).begin(), g.out_arrows(v).end());
  std::sort(step.removed.begin(), step.removed.end());
  return {apply_step(g, step), step};
}

Digraph apply_step(const Digraph& g, const ReductionStep& step) {
  const std::string& v = step.eliminated;
  if (!is_reducible_at(g, v))
    throw std::invalid_argument("step does not apply: '" + v + "' is not eliminable");
  std::vector<std::string> touching = g.in_arrows(v);
  touching.insert(touching.end(), g.out_arrows(v).begin(), g.out_arrows(v).end());
  std::sort(touching.begin(), touching.end());
  if (touching != step.removed)
    throw std::invalid_argument("step does not apply: removed arrows disagree at '" + v + "'");
  std::size_t pairs = g.in_degree(v) * g.out_degree(v);
  if (step.new_arrows.size() != pairs)
    throw std::invalid_argument("step does not apply: new-arrow table has wrong size");
  Digraph out;
  for (const std::string& u : g.vertices())
    if (u != v) out.add_vertex(u);
  std::set<std::string> gone(step.removed.begin(), step.removed.end());
  for (const Arrow& a : g.arrows())
    if (!gone.count(a.id)) out.add_arrow(a.id, a.source, a.target);
  for (const auto& [id, origin] : step.new_arrows) {
    const Arrow& f = g.arrow(origin.in_arrow);
    const Arrow& gg = g.arrow(origin.out_arrow);
    if (f.target != v || gg.source != v)
      throw std::invalid_argument("step does not apply: arrow pair misses '" + v + "'");
    out.add_arrow(id, f.source, gg.target);
  }
  return out;
}

namespace {

std::string smallest_eliminable(const Digraph& g) {
  for (const std::string& v : g.vertices())
    if (is_reducible_at(g, v)) return v;
  return "";
}

}  // namespace

ReductionTrace complete_reduction(const Digraph& g, const std::vector<std::string>& order) {
  ReductionTrace trace;
  trace.initial = g;
  Digraph cur = g;
  for (const std::string& v : order) {
    if (!cur.has_vertex(v))
      throw std::invalid_argument("elimination order names '" + v +
                                  "', which is absent at its turn");
    if (!is_reducible_at(cur, v))
      throw std::invalid_argument("elimination order names '" + v +
                                  "', which is a sink or has a loop at its turn");
    auto [next, step] = reduce_at(cur, v);
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  for (std::string v = smallest_eliminable(cur); !v.empty(); v = smallest_eliminable(cur)) {
    auto [next, step] = reduce_at(cur, v);
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  trace.final = std::move(cur);
  return trace;
}

namespace {

std::map<std::string, std::vector<std::string>> expansion_map(const ReductionTrace& trace) {
  std::map<std::string, std::vector<std::string>> exp;
  auto resolve = [&exp](const std::string& id) -> std::vector<std::string> {
    auto it = exp.find(id);
    return it == exp.end() ? std::vector<std::string>{id} : it->second;
  };
  for (const ReductionStep& s : trace.steps)
    for (const auto& [id, origin] : s.new_arrows) {
      std::vector<std::string> seq = resolve(origin.in_arrow);
      std::vector<std::string> tail = resolve(origin.out_arrow);
      seq.insert(seq.end(), tail.begin(), tail.end());
      exp[id] = std::move(seq);
    }
  return exp;
}

}  // namespace

std::vector<std::string> expand_arrow(const ReductionTrace& trace, const std::string& arrow_id) {
  auto exp = expansion_map(trace);
  auto it = exp.find(arrow_id);
  return it == exp.end() ? std::vector<std::string>{arrow_id} : it->second;
}

ReductionCorrespondence reduction_correspondence(const ReductionTrace& trace) {
  if (!is_reduced(trace.final))
    throw std::invalid_argument("trace is not a complete reduction: final graph is not reduced");
  ReductionCorrespondence out;
  MaximalElements mx = maximal_sinks_and_cycles(trace.initial);

  std::vector<std::string> isolated;
  for (const std::string& v : trace.final.vertices())
    if (trace.final.is_isolated(v)) isolated.push_back(v);
  if (isolated != mx.sinks)
    throw std::logic_error(
        "reduction correspondence failed: isolated vertices differ from maximal sinks");
  for (const std::string& v : isolated) out.sinks[v] = v;

  auto exp = expansion_map(trace);
  std::vector<Cycle> pulled;
  for (const std::string& v : trace.final.vertices()) {
    if (!trace.final.is_pseudo_source(v)) continue;
    const std::string& loop = trace.final.in_arrows(v)[0];
    auto it = exp.find(loop);
    std::vector<std::string> seq = it == exp.end() ? std::vector<std::string>{loop} : it->second;
    try {
      Cycle c(trace.initial, seq);
      pulled.push_back(c);
      out.cycles.emplace(v, std::move(c));
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(std::string("reduction correspondence failed: pseudo-source loop '") +
                             loop + "' does not expand to a cycle: " + e.what());
    }
  }
  std::sort(pulled.begin(), pulled.end());
  if (pulled != mx.cycles)
    throw std::logic_error(
        "reduction correspondence failed: pulled-back cycles differ from maximal cycles");
  return out;
}

}  // namespace lpa
