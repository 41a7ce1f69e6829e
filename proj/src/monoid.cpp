#include "lpa/monoid.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {

MonoidPresentation graph_monoid(const Digraph& g) {
  MonoidPresentation p;
  p.generators = g.vertices();
  for (const std::string& v : g.vertices()) {
    if (g.is_sink(v)) continue;
    std::map<std::string, std::size_t> rhs;
    for (const std::string& a : g.out_arrows(v)) ++rhs[g.arrow(a).target];
    p.relations.emplace_back(v, std::move(rhs));
  }
  return p;
}

DimensionFunctionCheck is_dimension_function(const Digraph& g, const DimensionFunction& d) {
  for (const std::string& v : g.vertices())
    if (!d.count(v))
      throw std::invalid_argument("dimension function is missing vertex '" + v + "'");
  for (const auto& [v, n] : d) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("dimension function names unknown vertex '" + v + "'");
    if (n < 0)
      throw std::invalid_argument("dimension function is negative at '" + v + "'");
  }
  DimensionFunctionCheck check{true, {}};
  for (const std::string& v : g.vertices()) {
    if (g.is_sink(v)) continue;
    mpz_class sum = 0;
    for (const std::string& a : g.out_arrows(v)) sum += d.at(g.arrow(a).target);
    if (sum != d.at(v)) {
      std::ostringstream msg;
      msg << "relation at '" << v << "' fails: d = " << d.at(v) << " but targets sum to " << sum;
      check.ok = false;
      check.violations.push_back(msg.str());
    }
  }
  return check;
}

namespace {

DimensionFunction counts_or_die(const Digraph& g, const std::string& base, const Cycle* c,
                                const std::string& what) {
  PathCountResult r = count_paths_to_base(g, base, c);
  if (!r.divergent.empty())
    throw std::logic_error("dimension basis failed: divergent path count toward " + what +
                           " despite maximality");
  DimensionFunction d;
  for (const std::string& v : g.vertices()) {
    auto it = r.counts.find(v);
    d[v] = it == r.counts.end() ? mpz_class(0) : it->second;
  }
  return d;
}

}  // namespace

std::vector<DimensionBasisElement> dimension_basis(const Digraph& g) {
  MaximalElements mx = maximal_sinks_and_cycles(g);
  std::vector<DimensionBasisElement> basis;
  for (const std::string& w : mx.sinks)
    basis.push_back({std::nullopt, w, counts_or_die(g, w, nullptr, "sink '" + w + "'")});
  for (const Cycle& c : mx.cycles)
    basis.push_back({c, c.base(), counts_or_die(g, c.base(), &c, "cycle at '" + c.base() + "'")});
  return basis;
}

DimensionDecomposition decompose_dimension_function(const Digraph& g,
                                                    const DimensionFunction& d) {
  DimensionFunctionCheck check = is_dimension_function(g, d);
  if (!check.ok) {
    std::ostringstream msg;
    msg << "not a dimension function:";
    for (const std::string& s : check.violations) msg << "\n  " << s;
    throw std::invalid_argument(msg.str());
  }
  DimensionDecomposition out;
  out.basis = dimension_basis(g);
  DimensionFunction rebuilt;
  for (const std::string& v : g.vertices()) rebuilt[v] = 0;
  for (const DimensionBasisElement& b : out.basis) {
    mpz_class coeff = d.at(b.anchor);
    out.coefficients.push_back(coeff);
    for (const auto& [v, n] : b.d) rebuilt[v] += coeff * n;
  }
  if (rebuilt != d)
    throw std::logic_error("dimension function decomposition failed to reconstruct its input");
  return out;
}

DimensionFunction restrict_dimension_function(const DimensionFunction& d,
                                              const std::string& eliminated) {
  if (!d.count(eliminated))
    throw std::invalid_argument("dimension function is missing vertex '" + eliminated + "'");
  DimensionFunction out = d;
  out.erase(eliminated);
  return out;
}

DimensionFunction extend_dimension_function(const Digraph& g, const std::string& eliminated,
                                            const DimensionFunction& dprime) {
  if (!g.has_vertex(eliminated) || g.is_sink(eliminated) || g.has_loop_at(eliminated))
    throw std::invalid_argument("'" + eliminated + "' is not an eliminable vertex of the graph");
  DimensionFunction out = dprime;
  mpz_class sum = 0;
  for (const std::string& a : g.out_arrows(eliminated)) {
    const std::string& t = g.arrow(a).target;
    auto it = dprime.find(t);
    if (it == dprime.end())
      throw std::invalid_argument("dimension function is missing vertex '" + t + "'");
    sum += it->second;
  }
  out[eliminated] = sum;
  return out;
}

}  // namespace lpa
