#include "lpa/digraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace lpa {
namespace {

std::set<std::string> reachable_from(const Digraph& g, const std::string& start,
                                     const std::string& skip_arrow = "") {
  std::set<std::string> seen{start};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const std::string& a : g.out_arrows(v)) {
      if (a == skip_arrow) continue;
      const std::string& t = g.arrow(a).target;
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return seen;
}

std::set<std::string> reaching_to(const Digraph& g, const std::string& goal,
                                  const std::string& skip_arrow = "") {
  std::set<std::string> seen{goal};
  std::deque<std::string> queue{goal};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const std::string& a : g.in_arrows(v)) {
      if (a == skip_arrow) continue;
      const std::string& s = g.arrow(a).source;
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::string> Digraph::validate_parts(const std::vector<std::string>& vertices,
                                                 const std::vector<Arrow>& arrows) {
  std::vector<std::string> issues;
  std::set<std::string> vseen;
  for (const std::string& v : vertices) {
    if (!vseen.insert(v).second) issues.push_back("duplicate vertex id '" + v + "'");
    if (v.find('*') != std::string::npos)
      issues.push_back("vertex id '" + v + "' contains reserved character '*'");
    if (v.empty()) issues.push_back("empty vertex id");
  }
  std::set<std::string> aseen;
  for (const Arrow& a : arrows) {
    if (!aseen.insert(a.id).second) issues.push_back("duplicate arrow id '" + a.id + "'");
    if (a.id.find('*') != std::string::npos)
      issues.push_back("arrow id '" + a.id + "' contains reserved character '*'");
    if (a.id.empty()) issues.push_back("empty arrow id");
    if (!vseen.count(a.source))
      issues.push_back("arrow '" + a.id + "' has dangling source '" + a.source + "'");
    if (!vseen.count(a.target))
      issues.push_back("arrow '" + a.id + "' has dangling target '" + a.target + "'");
  }
  return issues;
}

Digraph Digraph::from_parts(const std::vector<std::string>& vertices,
                            const std::vector<Arrow>& arrows) {
  std::vector<std::string> issues = validate_parts(vertices, arrows);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "invalid digraph:";
    for (const std::string& s : issues) msg << "\n  " << s;
    throw std::invalid_argument(msg.str());
  }
  Digraph g;
  for (const std::string& v : vertices) g.add_vertex(v);
  for (const Arrow& a : arrows) g.add_arrow(a.id, a.source, a.target);
  return g;
}

void Digraph::add_vertex(const std::string& id) {
  auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (pos != vertices_.end() && *pos == id)
    throw std::invalid_argument("duplicate vertex id '" + id + "'");
  vertices_.insert(pos, id);
  out_[id];
  in_[id];
}

void Digraph::add_arrow(const std::string& id, const std::string& source,
                        const std::string& target) {
  if (arrow_index_.count(id)) throw std::invalid_argument("duplicate arrow id '" + id + "'");
  if (!has_vertex(source))
    throw std::invalid_argument("arrow '" + id + "' has dangling source '" + source + "'");
  if (!has_vertex(target))
    throw std::invalid_argument("arrow '" + id + "' has dangling target '" + target + "'");
  Arrow a{id, source, target};
  auto pos = std::lower_bound(arrows_.begin(), arrows_.end(), a,
                              [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  std::size_t idx = static_cast<std::size_t>(pos - arrows_.begin());
  arrows_.insert(pos, a);
  for (auto& [aid, i] : arrow_index_)
    if (i >= idx) ++i;
  arrow_index_[id] = idx;
  auto& outs = out_[source];
  outs.insert(std::lower_bound(outs.begin(), outs.end(), id), id);
  auto& ins = in_[target];
  ins.insert(std::lower_bound(ins.begin(), ins.end(), id), id);
}

bool Digraph::has_vertex(const std::string& id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool Digraph::has_arrow(const std::string& id) const { return arrow_index_.count(id) > 0; }

const Arrow& Digraph::arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) throw std::invalid_argument("unknown arrow '" + id + "'");
  return arrows_[it->second];
}

void Digraph::require_vertex(const std::string& id) const {
  if (!has_vertex(id)) throw std::invalid_argument("unknown vertex '" + id + "'");
}

const std::vector<std::string>& Digraph::out_arrows(const std::string& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
  return it->second;
}

const std::vector<std::string>& Digraph::in_arrows(const std::string& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
  return it->second;
}

std::size_t Digraph::loops_at(const std::string& v) const {
  std::size_t n = 0;
  for (const std::string& a : out_arrows(v))
    if (arrow(a).target == v) ++n;
  return n;
}

bool Digraph::is_pseudo_source(const std::string& v) const {
  const auto& ins = in_arrows(v);
  return ins.size() == 1 && arrow(ins[0]).source == v;
}

std::vector<std::string> Digraph::sinks() const {
  std::vector<std::string> out;
  for (const std::string& v : vertices_)
    if (is_sink(v)) out.push_back(v);
  return out;
}

Digraph Digraph::induced_subgraph(const std::set<std::string>& keep) const {
  Digraph g;
  for (const std::string& v : keep) {
    require_vertex(v);
    g.add_vertex(v);
  }
  for (const Arrow& a : arrows_)
    if (keep.count(a.source) && keep.count(a.target)) g.add_arrow(a.id, a.source, a.target);
  return g;
}

Path::Path(const Digraph& g, const std::string& anchor) : source_(anchor), target_(anchor) {
  if (!g.has_vertex(anchor)) throw std::invalid_argument("unknown vertex '" + anchor + "'");
}

Path::Path(const Digraph& g, const std::vector<std::string>& arrow_ids) : arrows_(arrow_ids) {
  if (arrow_ids.empty())
    throw std::invalid_argument("empty path needs an anchor vertex, not an arrow list");
  for (std::size_t i = 0; i < arrow_ids.size(); ++i) {
    const Arrow& a = g.arrow(arrow_ids[i]);
    if (i > 0 && g.arrow(arrow_ids[i - 1]).target != a.source)
      throw std::invalid_argument("arrows '" + arrow_ids[i - 1] + "' and '" + arrow_ids[i] +
                                  "' do not compose");
  }
  source_ = g.arrow(arrow_ids.front()).source;
  target_ = g.arrow(arrow_ids.back()).target;
}

Path Path::prepended(const Digraph& g, const std::string& arrow_id) const {
  const Arrow& a = g.arrow(arrow_id);
  if (a.target != source_)
    throw std::invalid_argument("arrow '" + arrow_id + "' does not end at path source");
  Path p;
  p.arrows_.reserve(arrows_.size() + 1);
  p.arrows_.push_back(arrow_id);
  p.arrows_.insert(p.arrows_.end(), arrows_.begin(), arrows_.end());
  p.source_ = a.source;
  p.target_ = target_;
  return p;
}

std::strong_ordering Path::operator<=>(const Path& rhs) const {
  if (auto c = arrows_.size() <=> rhs.arrows_.size(); c != 0) return c;
  if (auto c = arrows_ <=> rhs.arrows_; c != 0) return c;
  if (auto c = source_ <=> rhs.source_; c != 0) return c;  // distinguishes empty paths
  return std::strong_ordering::equal;
}

Cycle::Cycle(const Digraph& g, const std::vector<std::string>& arrow_ids) {
  if (arrow_ids.empty()) throw std::invalid_argument("a cycle has at least one arrow");
  std::vector<std::string> srcs;
  for (std::size_t i = 0; i < arrow_ids.size(); ++i) {
    const Arrow& a = g.arrow(arrow_ids[i]);
    const Arrow& prev = g.arrow(arrow_ids[i == 0 ? arrow_ids.size() - 1 : i - 1]);
    if (prev.target != a.source)
      throw std::invalid_argument("arrows '" + prev.id + "' and '" + a.id + "' do not compose");
    srcs.push_back(a.source);
  }
  std::set<std::string> distinct(srcs.begin(), srcs.end());
  if (distinct.size() != srcs.size())
    throw std::invalid_argument("cycle revisits a vertex; only simple cycles are supported");
  std::size_t start = static_cast<std::size_t>(
      std::min_element(srcs.begin(), srcs.end()) - srcs.begin());
  for (std::size_t i = 0; i < arrow_ids.size(); ++i) {
    std::size_t j = (start + i) % arrow_ids.size();
    arrows_.push_back(arrow_ids[j]);
    vertices_.push_back(srcs[j]);
  }
}

bool Cycle::contains_vertex(const std::string& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Cycle::contains_arrow(const std::string& a) const {
  return std::find(arrows_.begin(), arrows_.end(), a) != arrows_.end();
}

std::strong_ordering Cycle::operator<=>(const Cycle& rhs) const {
  return arrows_ <=> rhs.arrows_;
}

std::map<std::string, VertexKind> vertex_kinds(const Digraph& g) {
  std::map<std::string, VertexKind> kinds;
  for (const std::string& v : g.vertices()) {
    VertexKind k{};
    if (g.is_isolated(v))
      k.category = VertexKind::Category::isolated;
    else if (g.is_sink(v))
      k.category = VertexKind::Category::sink;
    else if (g.is_source(v))
      k.category = VertexKind::Category::source;
    else
      k.category = VertexKind::Category::plain;
    k.pseudo_source = g.is_pseudo_source(v);
    kinds[v] = k;
  }
  return kinds;
}

namespace {

void circuit_dfs(const Digraph& g, const std::string& b, const std::string& at,
                 std::set<std::string>& visited, std::vector<std::string>& stack,
                 std::vector<Cycle>& out) {
  for (const std::string& a : g.out_arrows(at)) {
    const std::string& t = g.arrow(a).target;
    if (t == b) {
      stack.push_back(a);
      out.emplace_back(g, stack);
      stack.pop_back();
    } else if (t > b && !visited.count(t)) {
      visited.insert(t);
      stack.push_back(a);
      circuit_dfs(g, b, t, visited, stack, out);
      stack.pop_back();
      visited.erase(t);
    }
  }
}

}  // namespace

std::vector<Cycle> simple_cycles(const Digraph& g) {
  std::vector<Cycle> out;
  for (const std::string& b : g.vertices()) {
    // Circuits whose lexicographically smallest vertex is b: the DFS never
    // leaves {v >= b}, so each is found once, already canonically rotated.
    std::set<std::string> visited{b};
    std::vector<std::string> stack;
    circuit_dfs(g, b, b, visited, stack, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> cycle_exits(const Digraph& g, const Cycle& c) {
  std::vector<std::string> out;
  for (const std::string& v : c.vertices())
    for (const std::string& a : g.out_arrows(v))
      if (!c.contains_arrow(a)) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool connects_to(const Digraph& g, const std::string& from, const std::string& to) {
  if (!g.has_vertex(from)) throw std::invalid_argument("unknown vertex '" + from + "'");
  if (!g.has_vertex(to)) throw std::invalid_argument("unknown vertex '" + to + "'");
  return reachable_from(g, from).count(to) > 0;
}

MaximalElements maximal_sinks_and_cycles(const Digraph& g) {
  MaximalElements out;
  std::vector<Cycle> cycles = simple_cycles(g);
  // Within a cycle all vertices are mutually reachable, so the base's
  // reachable set decides what the cycle connects to.
  std::vector<std::set<std::string>> reach;
  reach.reserve(cycles.size());
  for (const Cycle& c : cycles) reach.push_back(reachable_from(g, c.base()));
  for (const std::string& w : g.sinks()) {
    bool hit = false;
    for (const auto& r : reach)
      if (r.count(w)) {
        hit = true;
        break;
      }
    if (!hit) out.sinks.push_back(w);
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < cycles.size() && !hit; ++j) {
      if (j == i) continue;
      for (const std::string& v : cycles[i].vertices())
        if (reach[j].count(v)) {
          hit = true;
          break;
        }
    }
    if (!hit) out.cycles.push_back(cycles[i]);
  }
  return out;
}

Digraph predecessors_subgraph(const Digraph& g, const std::string& target) {
  if (!g.has_vertex(target)) throw std::invalid_argument("unknown vertex '" + target + "'");
  return g.induced_subgraph(reaching_to(g, target));
}

Digraph predecessors_subgraph(const Digraph& g, const Cycle& target) {
  return predecessors_subgraph(g, target.base());
}

std::vector<std::string> hereditary_saturated_closure(const Digraph& g,
                                                      const std::set<std::string>& seed) {
  std::set<std::string> h;
  for (const std::string& v : seed) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
    h.insert(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arrow& a : g.arrows())
      if (h.count(a.source) && h.insert(a.target).second) changed = true;
    for (const std::string& v : g.vertices()) {
      if (h.count(v) || g.is_sink(v)) continue;
      bool all = true;
      for (const std::string& a : g.out_arrows(v))
        if (!h.count(g.arrow(a).target)) {
          all = false;
          break;
        }
      if (all) {
        h.insert(v);
        changed = true;
      }
    }
  }
  return {h.begin(), h.end()};
}

namespace {

// Shared skeleton for path counting/enumeration toward base: restrict to
// vertices that can still reach base once the cycle's base-leaving arrow is
// cut, then peel vertices whose remaining out-arrows are all resolved.
// Whatever cannot be peeled sits on or upstream of a surviving cycle, so
// its path count diverges.
struct BaseReach {
  std::set<std::string> pool;                       // can reach base after the cut
  std::vector<std::string> peel_order;              // reverse-topological
  std::set<std::string> divergent;                  // pool minus peeled
  std::map<std::string, std::vector<std::string>> live_out;  // surviving arrows in pool
  std::string cut;
};

BaseReach base_reach(const Digraph& g, const std::string& base, const Cycle* c,
                     const std::string& explicit_cut = "") {
  if (!g.has_vertex(base)) throw std::invalid_argument("unknown vertex '" + base + "'");
  BaseReach r;
  if (c) {
    if (!c->contains_vertex(base) || c->base() != base)
      throw std::invalid_argument("base '" + base + "' is not the cycle's canonical base");
    r.cut = c->arrow_leaving_base();
  } else if (!explicit_cut.empty()) {
    if (g.arrow(explicit_cut).source != base)
      throw std::invalid_argument("cut arrow '" + explicit_cut + "' does not leave the base");
    r.cut = explicit_cut;
  }
  r.pool = reaching_to(g, base, r.cut);
  std::map<std::string, std::size_t> outdeg;
  for (const std::string& v : r.pool) {
    auto& live = r.live_out[v];
    for (const std::string& a : g.out_arrows(v)) {
      if (a == r.cut) continue;
      if (r.pool.count(g.arrow(a).target)) live.push_back(a);
    }
    outdeg[v] = live.size();
  }
  std::deque<std::string> queue;
  for (const auto& [v, d] : outdeg)
    if (d == 0) queue.push_back(v);
  std::set<std::string> peeled;
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    peeled.insert(v);
    r.peel_order.push_back(v);
    for (const std::string& a : g.in_arrows(v)) {
      if (a == r.cut) continue;
      const std::string& s = g.arrow(a).source;
      if (r.pool.count(s) && --outdeg[s] == 0) queue.push_back(s);
    }
  }
  for (const std::string& v : r.pool)
    if (!peeled.count(v)) r.divergent.insert(v);
  return r;
}

}  // namespace

PathCountResult count_paths_to_base(const Digraph& g, const std::string& base, const Cycle* c) {
  BaseReach r = base_reach(g, base, c);
  PathCountResult out;
  out.divergent = r.divergent;
  for (const std::string& v : r.peel_order) {
    mpz_class n = (v == base) ? 1 : 0;
    for (const std::string& a : r.live_out[v]) n += out.counts[g.arrow(a).target];
    out.counts[v] = n;
  }
  return out;
}

mpz_class count_paths_avoiding_cycle(const Digraph& g, const std::string& from,
                                     const std::string& base, const Cycle* c) {
  if (!g.has_vertex(from)) throw std::invalid_argument("unknown vertex '" + from + "'");
  PathCountResult r = count_paths_to_base(g, base, c);
  if (r.divergent.count(from))
    throw std::domain_error("path count from '" + from + "' to '" + base +
                            "' diverges: a cycle lies on a connecting path");
  auto it = r.counts.find(from);
  return it == r.counts.end() ? mpz_class(0) : it->second;
}

namespace {

std::map<std::string, std::vector<Path>> enumerate_paths(const Digraph& g, const BaseReach& r,
                                                         const std::string& base) {
  if (!r.divergent.empty())
    throw std::domain_error("path enumeration toward '" + base + "' diverges at vertex '" +
                            *r.divergent.begin() + "'");
  std::map<std::string, std::vector<Path>> out;
  for (const std::string& v : r.peel_order) {
    std::vector<Path> list;
    if (v == base) list.emplace_back(g, base);
    for (const std::string& a : r.live_out.at(v))
      for (const Path& p : out[g.arrow(a).target]) list.push_back(p.prepended(g, a));
    std::sort(list.begin(), list.end());
    out[v] = std::move(list);
  }
  return out;
}

}  // namespace

std::map<std::string, std::vector<Path>> paths_to_base(const Digraph& g, const std::string& base,
                                                       const Cycle* c) {
  return enumerate_paths(g, base_reach(g, base, c), base);
}

std::map<std::string, std::vector<Path>> paths_to_base_cut(const Digraph& g,
                                                           const std::string& base,
                                                           const std::string& cut_arrow) {
  return enumerate_paths(g, base_reach(g, base, nullptr, cut_arrow), base);
}

}  // namespace lpa
