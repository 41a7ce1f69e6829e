#ifndef LPA_FACTOR_HPP_
#define LPA_FACTOR_HPP_

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/poly.hpp"

namespace lpa {

// Factoring over the rationals is capped at this degree; see DegreeCapError.
inline constexpr int kFactorDegreeCap = 64;

struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f = unit * prod factors[i].first ^ factors[i].second with monic irreducible
// factors sorted by the deterministic polynomial order.
struct Factorization {
  Scalar unit;
  std::vector<std::pair<Poly, unsigned>> factors;
};

// Complete factorization into irreducibles. Over GF(p) this is
// squarefree decomposition, distinct-degree splitting and Cantor-Zassenhaus;
// over the rationals, Hensel lifting from a good prime with subset
// recombination. The rng drives only internal splitting choices; the result
// is canonical. Throws DegreeCapError for rational inputs of degree above
// kFactorDegreeCap and std::invalid_argument on the zero polynomial.
Factorization factor(const Poly& f, std::mt19937_64& rng);

// Nonconstant with exactly one irreducible factor of multiplicity one.
bool is_irreducible(const Poly& f, std::mt19937_64& rng);

// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
// coefficients in the last column. Degree 0 gives the 0x0 matrix.
Matrix companion(const Poly& p);

// One primary component of an invertible operator, keyed by the
// constant-term-1 normal form f (the reversal of the monic irreducible
// divisor g of the characteristic polynomial). blocks lists (power n, count)
// with powers ascending; each block is similar to the companion matrix of
// g^n.
struct PrimaryPart {
  Poly f;
  std::vector<std::pair<unsigned, std::size_t>> blocks;
};

// Decomposition of a square invertible matrix up to similarity, sorted by f.
// Sum over parts of deg(f) * sum(n * count) equals the matrix size. Throws
// std::invalid_argument on non-square or singular input.
std::vector<PrimaryPart> primary_decomposition(const Matrix& m, std::mt19937_64& rng);

// Companion matrix of the monic polynomial whose reversal is f^n: the
// canonical block with primary_decomposition [(f, [(n,1)])]. Validates that
// f(0) = 1 and that the monic reversal of f is irreducible.
Matrix companion_block(const Poly& f, unsigned n, std::mt19937_64& rng);

}  // namespace lpa

#endif  // LPA_FACTOR_HPP_
