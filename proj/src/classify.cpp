#include "lpa/classify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace lpa {

std::strong_ordering CycleSummand::operator<=>(const CycleSummand& rhs) const {
  if (auto c = cycle <=> rhs.cycle; c != 0) return c;
  if (auto c = f <=> rhs.f; c != 0) return c;
  if (auto c = n <=> rhs.n; c != 0) return c;
  return multiplicity <=> rhs.multiplicity;
}

namespace {

// Complete reduction that never eliminates a protected vertex. On a no-exit
// support graph with the cycle bases protected, the result is reduced:
// every cycle contracts onto its base.
ReductionTrace protected_reduction(const Digraph& g, const std::set<std::string>& protect) {
  ReductionTrace trace;
  trace.initial = g;
  Digraph cur = g;
  for (;;) {
    std::string pick;
    for (const std::string& v : cur.vertices())
      if (!protect.count(v) && is_reducible_at(cur, v)) {
        pick = v;
        break;
      }
    if (pick.empty()) break;
    auto [next, step] = reduce_at(cur, pick);
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  trace.final = std::move(cur);
  if (!is_reduced(trace.final))
    throw std::logic_error("classify: protected reduction of the support did not terminate reduced");
  return trace;
}

void sort_invariants(ModuleInvariants& inv) {
  std::sort(inv.sinks.begin(), inv.sinks.end());
  std::sort(inv.cycles.begin(), inv.cycles.end());
}

// Merge summands that differ only in multiplicity; reject multiplicity 0.
void normalize_invariants(ModuleInvariants& inv) {
  sort_invariants(inv);
  std::vector<SinkSummand> sinks;
  for (const SinkSummand& s : inv.sinks) {
    if (s.multiplicity == 0) throw std::invalid_argument("sink summand with multiplicity 0");
    if (!sinks.empty() && sinks.back().sink == s.sink)
      sinks.back().multiplicity += s.multiplicity;
    else
      sinks.push_back(s);
  }
  std::vector<CycleSummand> cycles;
  for (const CycleSummand& c : inv.cycles) {
    if (c.multiplicity == 0) throw std::invalid_argument("cycle summand with multiplicity 0");
    if (!cycles.empty() && cycles.back().cycle == c.cycle && cycles.back().f == c.f &&
        cycles.back().n == c.n)
      cycles.back().multiplicity += c.multiplicity;
    else
      cycles.push_back(c);
  }
  inv.sinks = std::move(sinks);
  inv.cycles = std::move(cycles);
}

// The dimension every summand contributes at every vertex; throws
// std::logic_error if any count diverges (the anchors must be maximal).
DimensionFunction invariant_dimensions(const Digraph& g, const ModuleInvariants& inv) {
  DimensionFunction expected;
  for (const std::string& v : g.vertices()) expected[v] = 0;
  for (const SinkSummand& s : inv.sinks) {
    PathCountResult counts = count_paths_to_base(g, s.sink, nullptr);
    if (!counts.divergent.empty())
      throw std::logic_error("divergent path count toward sink '" + s.sink + "'");
    for (const auto& [v, c] : counts.counts) expected[v] += mpz_class(s.multiplicity) * c;
  }
  for (const CycleSummand& cs : inv.cycles) {
    PathCountResult counts = count_paths_to_base(g, cs.cycle.base(), &cs.cycle);
    if (!counts.divergent.empty())
      throw std::logic_error("divergent path count toward cycle at '" + cs.cycle.base() + "'");
    mpz_class block = mpz_class(cs.multiplicity) * (cs.n * static_cast<unsigned long>(cs.f.degree()));
    for (const auto& [v, c] : counts.counts) expected[v] += block * c;
  }
  return expected;
}

}  // namespace

ModuleInvariants classify(const QuiverRep& r) {
  ConditionIResult ci = check_condition_I(r);
  if (!ci.ok) throw std::invalid_argument("classify: " + ci.describe());

  Digraph lambda = support_subgraph(r);
  QuiverRep rr = restrict_to(r, lambda);
  NoExitCheck ne = no_exit_support_check(rr);
  if (!ne.ok)
    throw std::logic_error("classify: support cycle has exit '" + ne.exit_arrow +
                           "' despite condition (I)");

  std::set<std::string> protect;
  for (const Cycle& c : simple_cycles(lambda)) protect.insert(c.base());
  ReductionTrace trace = protected_reduction(lambda, protect);
  QuiverRep fr = transport(rr, trace, TransportDirection::forward);
  ReductionCorrespondence corr = reduction_correspondence(trace);

  ModuleInvariants inv{r.graph(), r.field(), {}, {}};
  std::mt19937_64 rng(0x1ea57ull);
  for (const std::string& v : fr.graph().vertices()) {
    if (fr.graph().is_isolated(v)) {
      inv.sinks.push_back({v, fr.dim(v)});
    } else if (fr.graph().is_pseudo_source(v) && fr.graph().out_degree(v) == 1) {
      const std::string& loop = fr.graph().in_arrows(v)[0];
      const Cycle& c = corr.cycles.at(v);
      for (const PrimaryPart& part : primary_decomposition(fr.arrow_matrix(loop), rng))
        for (const auto& [n, count] : part.blocks) inv.cycles.push_back({c, part.f, n, count});
    } else {
      throw std::logic_error("classify: reduced support is not loops plus isolated vertices");
    }
  }
  sort_invariants(inv);

  // Anchors must be maximal in the ambient graph, and the summand
  // dimensions must add up to the representation's dimension function.
  MaximalElements mx = maximal_sinks_and_cycles(r.graph());
  for (const SinkSummand& s : inv.sinks)
    if (!std::binary_search(mx.sinks.begin(), mx.sinks.end(), s.sink))
      throw std::logic_error("classify: support sink '" + s.sink + "' is not maximal");
  for (const CycleSummand& cs : inv.cycles)
    if (!std::binary_search(mx.cycles.begin(), mx.cycles.end(), cs.cycle))
      throw std::logic_error("classify: support cycle at '" + cs.cycle.base() +
                             "' is not maximal");
  if (invariant_dimensions(r.graph(), inv) != dimension_function_of(r))
    throw std::logic_error("classify: summand dimensions do not sum to the rep's dimensions");
  return inv;
}

namespace {

QuiverRep sink_indecomposable(const Digraph& g, const Field& F, const std::string& w) {
  std::map<std::string, std::vector<Path>> paths = paths_to_base(g, w, nullptr);
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : g.vertices()) {
    auto it = paths.find(v);
    dims[v] = it == paths.end() ? 0 : it->second.size();
  }
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : g.arrows()) {
    Matrix m(F, dims[a.source], dims[a.target]);
    if (dims[a.source] > 0 && dims[a.target] > 0) {
      const std::vector<Path>& rows = paths.at(a.source);
      const std::vector<Path>& cols = paths.at(a.target);
      for (std::size_t q = 0; q < cols.size(); ++q) {
        Path p = cols[q].prepended(g, a.id);
        auto it = std::lower_bound(rows.begin(), rows.end(), p);
        if (it != rows.end() && *it == p)
          m.set(static_cast<std::size_t>(it - rows.begin()), q, F.one());
      }
    }
    mats.emplace(a.id, std::move(m));
  }
  return QuiverRep(g, F, std::move(dims), std::move(mats));
}

}  // namespace

QuiverRep construct_cycle_summand_at(const Digraph& g, const Field& F, const Cycle& c,
                                     const Poly& f, unsigned n, const std::string& anchor) {
  if (!c.contains_vertex(anchor))
    throw std::invalid_argument("anchor '" + anchor + "' is not on the cycle");
  if (n == 0) throw std::invalid_argument("cycle summand power must be at least 1");
  if (!(f.field() == F)) throw std::invalid_argument("cycle polynomial is over the wrong field");
  if (!F.is_one(f.constant_term()))
    throw std::invalid_argument("cycle polynomial must have constant term 1");
  const auto& cverts = c.vertices();
  std::size_t idx =
      static_cast<std::size_t>(std::find(cverts.begin(), cverts.end(), anchor) - cverts.begin());
  const std::string& cut = c.arrows()[idx];

  std::mt19937_64 rng(0xc0117ull);
  Matrix comp = companion_block(f, n, rng);
  std::size_t D = comp.rows();

  std::map<std::string, std::vector<Path>> paths = paths_to_base_cut(g, anchor, cut);
  std::map<std::string, std::size_t> dims;
  for (const std::string& v : g.vertices()) {
    auto it = paths.find(v);
    dims[v] = it == paths.end() ? 0 : it->second.size() * D;
  }
  std::map<std::string, Matrix> mats;
  for (const Arrow& a : g.arrows()) {
    if (a.id == cut) {
      mats.emplace(a.id, comp);
      continue;
    }
    Matrix m(F, dims[a.source], dims[a.target]);
    if (dims[a.source] > 0 && dims[a.target] > 0) {
      const std::vector<Path>& rows = paths.at(a.source);
      const std::vector<Path>& cols = paths.at(a.target);
      for (std::size_t q = 0; q < cols.size(); ++q) {
        Path p = cols[q].prepended(g, a.id);
        auto it = std::lower_bound(rows.begin(), rows.end(), p);
        if (it != rows.end() && *it == p) {
          std::size_t row = static_cast<std::size_t>(it - rows.begin());
          for (std::size_t d = 0; d < D; ++d) m.set(row * D + d, q * D + d, F.one());
        }
      }
    }
    mats.emplace(a.id, std::move(m));
  }
  return QuiverRep(g, F, std::move(dims), std::move(mats));
}

QuiverRep construct(const Digraph& g, const ModuleInvariants& inv) {
  if (!(inv.graph == g))
    throw std::invalid_argument("invariants are anchored to a different graph");
  ModuleInvariants norm = inv;
  normalize_invariants(norm);

  MaximalElements mx = maximal_sinks_and_cycles(g);
  for (const SinkSummand& s : norm.sinks)
    if (!std::binary_search(mx.sinks.begin(), mx.sinks.end(), s.sink))
      throw std::invalid_argument("sink '" + s.sink + "' is not a maximal sink");
  for (const CycleSummand& cs : norm.cycles)
    if (!std::binary_search(mx.cycles.begin(), mx.cycles.end(), cs.cycle))
      throw std::invalid_argument("cycle at '" + cs.cycle.base() + "' is not a maximal cycle");

  std::vector<QuiverRep> parts;
  for (const SinkSummand& s : norm.sinks) {
    QuiverRep one = sink_indecomposable(g, norm.field, s.sink);
    parts.insert(parts.end(), s.multiplicity, one);
  }
  for (const CycleSummand& cs : norm.cycles) {
    QuiverRep one =
        construct_cycle_summand_at(g, norm.field, cs.cycle, cs.f, cs.n, cs.cycle.base());
    parts.insert(parts.end(), cs.multiplicity, one);
  }
  QuiverRep out = parts.empty() ? QuiverRep::zero(g, norm.field) : direct_sum(parts);
  ConditionIResult ci = check_condition_I(out);
  if (!ci.ok) throw std::logic_error("construct: " + ci.describe());
  return out;
}

bool is_isomorphic(const QuiverRep& r1, const QuiverRep& r2) {
  if (!(r1.graph() == r2.graph()))
    throw std::invalid_argument("isomorphism test needs representations of the same graph");
  if (!(r1.field() == r2.field()))
    throw std::invalid_argument("isomorphism test needs representations over the same field");
  return classify(r1) == classify(r2);
}

bool is_simple(const SinkSummand& s) { return s.multiplicity == 1; }
bool is_simple(const CycleSummand& s) { return s.n == 1 && s.multiplicity == 1; }
bool is_simple(const Summand& s) {
  return std::visit([](const auto& x) { return is_simple(x); }, s);
}

bool ext_vanishes(const Summand& a, const Summand& b) {
  if (!is_simple(a) || !is_simple(b))
    throw std::invalid_argument("ext_vanishes is defined on simple summands only");
  const CycleSummand* ca = std::get_if<CycleSummand>(&a);
  const CycleSummand* cb = std::get_if<CycleSummand>(&b);
  if (ca && cb && *ca == *cb) return false;
  return true;
}

ExistenceProfile existence_profile(const Digraph& g) {
  ExistenceProfile p{};
  MaximalElements mx = maximal_sinks_and_cycles(g);
  p.has_nonzero_fd_module = !mx.sinks.empty() || !mx.cycles.empty();
  p.finite_representation_type = mx.cycles.empty();
  Digraph reduced = complete_reduction(g).final;
  bool all_isolated = true;
  for (const std::string& v : reduced.vertices())
    if (!reduced.is_isolated(v)) all_isolated = false;
  p.l_gamma_finite_dimensional = all_isolated;
  if (all_isolated) p.matrix_summand_count = reduced.vertices().size();
  return p;
}

}  // namespace lpa
