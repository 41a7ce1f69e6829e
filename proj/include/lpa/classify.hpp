#ifndef LPA_CLASSIFY_HPP_
#define LPA_CLASSIFY_HPP_

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpa/factor.hpp"
#include "lpa/morita.hpp"
#include "lpa/quiverrep.hpp"

namespace lpa {

// Indecomposable anchored at a maximal sink: determined by the dimension
// at the sink alone.
struct SinkSummand {
  std::string sink;
  std::size_t multiplicity = 1;  // the dimension at the sink
  friend auto operator<=>(const SinkSummand&, const SinkSummand&) = default;
};

// Indecomposable anchored at a maximal cycle: the full-lap operator at the
// cycle's base vertex is similar to the companion block of rev(f)^n, where
// f has constant term 1 and irreducible monic reversal. f recovers as
// det(1 - x*phi) of a primary part of the lap operator.
struct CycleSummand {
  Cycle cycle;
  Poly f;
  unsigned n = 1;
  std::size_t multiplicity = 1;

  std::strong_ordering operator<=>(const CycleSummand& rhs) const;
  bool operator==(const CycleSummand&) const = default;
};

// Complete isomorphism invariant of a finite-dimensional condition-(I)
// representation: a multiset of sink and cycle summands in canonical order
// (sinks by id; cycle summands by cycle, then f, then n).
struct ModuleInvariants {
  Digraph graph;
  Field field;
  std::vector<SinkSummand> sinks;
  std::vector<CycleSummand> cycles;
  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

// Decompose a condition-(I) representation into its invariants: restrict
// to the support, completely reduce it while protecting each support
// cycle's base vertex, transport the representation forward, then read
// sinks off isolated vertices and cycle summands off the primary
// decomposition of each surviving loop matrix. Throws std::invalid_argument
// when condition (I) fails, DegreeCapError when a rational factorization
// exceeds the degree cap, and std::logic_error if an internal consistency
// assertion (reduced-shape, dimension sum rule) fails.
ModuleInvariants classify(const QuiverRep& r);

// Build the canonical representation with the given invariants: the direct
// sum, in canonical order, of one explicit indecomposable per summand unit.
// A sink summand places one coordinate per path into the sink; a cycle
// summand places n*deg(f) coordinates per path into the base vertex
// (avoiding the full lap), acts by companion_block(f, n) on the arrow
// leaving the base, by the identity on other cycle arrows, and by
// path-matching projections elsewhere. Validates maximality of every
// anchor, f(0) = 1, irreducibility of rev(f), and field consistency.
QuiverRep construct(const Digraph& g, const ModuleInvariants& inv);

// Variation point for the base-independence property: build the cycle
// indecomposable with the companion action on the arrow leaving `anchor`
// (any vertex of c) instead of the canonical base. Classify output is
// provably independent of the anchor.
QuiverRep construct_cycle_summand_at(const Digraph& g, const Field& field, const Cycle& c,
                                     const Poly& f, unsigned n, const std::string& anchor);

// classify(r1) == classify(r2); requires the same graph and field and
// condition (I) on both.
bool is_isomorphic(const QuiverRep& r1, const QuiverRep& r2);

using Summand = std::variant<SinkSummand, CycleSummand>;

bool is_simple(const SinkSummand& s);   // multiplicity 1
bool is_simple(const CycleSummand& s);  // n == 1 and multiplicity 1
bool is_simple(const Summand& s);

// Ext(a, b) = 0 for simple summands a, b: false exactly when a == b and
// they are cycle summands. Non-simple inputs are rejected.
bool ext_vanishes(const Summand& a, const Summand& b);

struct ExistenceProfile {
  // Some nonzero finite-dimensional module exists: a maximal sink or
  // maximal cycle exists.
  bool has_nonzero_fd_module;
  // Finitely many indecomposables up to isomorphism: no maximal cycles.
  bool finite_representation_type;
  // The algebra itself is finite dimensional: the complete reduction
  // consists of isolated vertices only; then it is a product of
  // matrix_summand_count matrix algebras.
  bool l_gamma_finite_dimensional;
  std::optional<std::size_t> matrix_summand_count;
};

ExistenceProfile existence_profile(const Digraph& g);

}  // namespace lpa

#endif  // LPA_CLASSIFY_HPP_
