#ifndef LPA_MONOID_HPP_
#define LPA_MONOID_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lpa/digraph.hpp"

namespace lpa {

// Commutative monoid on the vertices with one relation per non-sink:
// v = sum of its out-arrow targets, counted with multiplicity.
struct MonoidPresentation {
  std::vector<std::string> generators;  // sorted vertex ids
  // (v, multiset of targets), one entry per non-sink v, sorted by v.
  std::vector<std::pair<std::string, std::map<std::string, std::size_t>>> relations;
  friend bool operator==(const MonoidPresentation&, const MonoidPresentation&) = default;
};

// Total map vertex -> natural number satisfying the monoid relations.
using DimensionFunction = std::map<std::string, mpz_class>;

MonoidPresentation graph_monoid(const Digraph& g);

struct DimensionFunctionCheck {
  bool ok;
  std::vector<std::string> violations;  // one line per failed relation
};

// Throws std::invalid_argument when d is not a total nonnegative map on
// the vertices; relation failures are reported, not thrown.
DimensionFunctionCheck is_dimension_function(const Digraph& g, const DimensionFunction& d);

// Free generator of the dimension-function monoid: a maximal sink, or a
// maximal cycle. The anchor (the sink itself, or the cycle's base) is where
// a decomposition reads off this generator's coefficient.
struct DimensionBasisElement {
  std::optional<Cycle> cycle;  // empty for a sink generator
  std::string anchor;
  DimensionFunction d;
  friend bool operator==(const DimensionBasisElement&, const DimensionBasisElement&) = default;
};

// One element per maximal sink w (d(u) = number of paths u -> w), then one
// per maximal cycle C (d(u) = number of paths u -> base avoiding C's full
// lap). Sinks sorted by id, cycles by canonical form. A divergent path
// count would contradict maximality and throws std::logic_error.
std::vector<DimensionBasisElement> dimension_basis(const Digraph& g);

struct DimensionDecomposition {
  std::vector<DimensionBasisElement> basis;  // dimension_basis(g)
  std::vector<mpz_class> coefficients;       // aligned with basis
};

// The unique expression of d over the basis: each coefficient is d at the
// generator's anchor. Throws std::invalid_argument when d fails the
// relations; an exact-reconstruction failure on a valid d would falsify
// the classification and throws std::logic_error.
DimensionDecomposition decompose_dimension_function(const Digraph& g, const DimensionFunction& d);

// The mutually inverse maps between dimension functions of a graph and of
// its one-step reduction eliminating v: restriction drops the entry at v;
// extension recomputes it from the pre-step graph g as d(v) = sum of
// d'(t(f)) over out-arrows f of v.
DimensionFunction restrict_dimension_function(const DimensionFunction& d,
                                              const std::string& eliminated);
DimensionFunction extend_dimension_function(const Digraph& g, const std::string& eliminated,
                                            const DimensionFunction& dprime);

}  // namespace lpa

#endif  // LPA_MONOID_HPP_
