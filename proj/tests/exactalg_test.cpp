#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpa/factor.hpp"
#include "test_support.hpp"

using namespace lpa;
using lpa::testing::cofactor_char_poly;
using lpa::testing::random_invertible;
using lpa::testing::random_matrix;
using lpa::testing::random_poly;
using lpa::testing::trial_division_irreducible;

namespace {

Poly reassemble(const Factorization& fac, const Field& F) {
  Poly out(F, {fac.unit});
  for (const auto& [g, e] : fac.factors)
    for (unsigned i = 0; i < e; ++i) out = out * g;
  return out;
}

}  // namespace

TEST_CASE("field arithmetic over Q and GF(7)") {
  Field Q = Field::rationals();
  Field F7 = Field::prime(7);
  CHECK(Q.describe() == "Q");
  CHECK(F7.describe() == "GF(7)");
  CHECK(Q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
  CHECK(Q.inv(Scalar(-2, 3)) == Scalar(-3, 2));
  CHECK(F7.mul(Scalar(3), Scalar(5)) == Scalar(1));
  CHECK(F7.inv(Scalar(3)) == Scalar(5));
  CHECK(F7.reduce(Scalar(-1)) == Scalar(6));
  CHECK(F7.reduce(Scalar(1, 2)) == Scalar(4));  // 2^-1 = 4 mod 7
  CHECK(F7.neg(Scalar(0)) == Scalar(0));
  CHECK_THROWS_AS(F7.inv(Scalar(0)), std::domain_error);
  CHECK_THROWS_AS((void)Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(F7.reduce(Scalar(1, 7)), std::domain_error);
}

TEST_CASE("primality test matches trial division") {
  for (std::uint32_t n = 0; n < 2000; ++n) {
    bool naive = n >= 2;
    for (std::uint32_t d = 2; d * d <= n && naive; ++d)
      if (n % d == 0) naive = false;
    CHECK(is_prime_u32(n) == naive);
  }
  CHECK(is_prime_u32(2147483647u));  // 2^31 - 1
  CHECK_FALSE(is_prime_u32(2147483647u - 1));
}

TEST_CASE("polynomial arithmetic round trips") {
  std::mt19937_64 rng(11);
  for (const Field& F : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (int iter = 0; iter < 200; ++iter) {
      Poly a = random_poly(F, 6, rng);
      Poly b = random_poly(F, 6, rng);
      CHECK(a + b - b == a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
      }
      if (!a.is_zero() && !F.is_zero(a.constant_term())) CHECK(a.reversed().reversed() == a);
      if (!a.is_zero() && !b.is_zero()) {
        Poly g = poly_gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK(g.is_monic());
      }
    }
  }
}

TEST_CASE("modular polynomial exponentiation matches repeated multiplication") {
  std::mt19937_64 rng(12);
  Field F5 = Field::prime(5);
  for (int iter = 0; iter < 50; ++iter) {
    Poly m = random_poly(F5, 5, rng);
    if (m.degree() < 1) continue;
    Poly a = random_poly(F5, 4, rng);
    Poly naive(F5, {F5.one()});
    unsigned e = static_cast<unsigned>(lpa::testing::pick(rng, 12));
    for (unsigned i = 0; i < e; ++i) naive = (naive * a) % m;
    CHECK(powmod(a, e, m) == naive);
    CHECK(mulmod(a, a, m) == (a * a) % m);
  }
}

TEST_CASE("matrix rank, inverse, determinant, kernel") {
  std::mt19937_64 rng(13);
  for (const Field& F : {Field::rationals(), Field::prime(5)}) {
    for (int iter = 0; iter < 60; ++iter) {
      std::size_t n = lpa::testing::pick(rng, 5);
      Matrix m = random_matrix(F, n, n + lpa::testing::pick(rng, 3), rng);
      std::size_t rk = m.rank();
      CHECK(rk <= std::min(m.rows(), m.cols()));
      std::vector<std::vector<Scalar>> ker = m.right_kernel();
      CHECK(ker.size() == m.cols() - rk);
      for (const std::vector<Scalar>& k : ker) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Scalar acc = F.zero();
          for (std::size_t j = 0; j < m.cols(); ++j) acc = F.add(acc, F.mul(m.at(i, j), k[j]));
          CHECK(F.is_zero(acc));
        }
      }
      Matrix inv = random_invertible(F, n, rng);
      CHECK(*inv.inverse() * inv == Matrix::identity(F, n));
      CHECK_FALSE(F.is_zero(inv.det()));
    }
  }
}

TEST_CASE("zero-dimensional matrices behave as identities") {
  Field Q = Field::rationals();
  Matrix z(Q, 0, 0);
  CHECK(z.is_invertible());
  CHECK(z.det() == Scalar(1));
  CHECK(z.rank() == 0);
  CHECK(z.char_poly() == Poly(Q, {Scalar(1)}));
  CHECK(z.reversed_char_poly() == Poly(Q, {Scalar(1)}));
  std::mt19937_64 rng(1);
  Matrix r(Q, 0, 3), c(Q, 3, 0);
  CHECK((r * random_matrix(Q, 3, 2, rng)).rows() == 0);
  CHECK((c * r).rows() == 3);
  CHECK(Matrix::hstack(Q, 0, {r, r}).cols() == 6);
  CHECK(Matrix::block_diag(Q, {z, Matrix::identity(Q, 2)}) == Matrix::identity(Q, 2));
}

TEST_CASE("characteristic polynomial matches cofactor expansion") {
  std::mt19937_64 rng(14);
  for (const Field& F : {Field::rationals(), Field::prime(5)}) {
    for (int iter = 0; iter < 60; ++iter) {
      std::size_t n = lpa::testing::pick(rng, 5);
      Matrix m = random_matrix(F, n, n, rng);
      Poly cp = m.char_poly();
      CHECK(cp == cofactor_char_poly(m));
      CHECK(cp.is_monic());
      CHECK(cp.degree() == static_cast<int>(n));
      // det(1 - xm) is the coefficient reversal of det(xI - m)
      Poly rev = m.reversed_char_poly();
      CHECK(F.is_one(rev.constant_term()));
      for (int i = 0; i <= cp.degree(); ++i)
        CHECK(rev.coeff(cp.degree() - i) == cp.coeff(i));
    }
  }
}

TEST_CASE("factoring known rational polynomials") {
  std::mt19937_64 rng(15);
  Field Q = Field::rationals();
  // (x-1)(x+1)(x^2+1)
  Poly f = Poly::from_ints(Q, {-1, 0, 0, 0, 1});
  Factorization fac = factor(f, rng);
  CHECK(fac.factors.size() == 3);
  CHECK(reassemble(fac, Q) == f);
  // x^6 + x^3 + 1 (ninth cyclotomic) is irreducible
  CHECK(is_irreducible(Poly::from_ints(Q, {1, 0, 0, 1, 0, 0, 1}), rng));
  // Mignotte-style: (x^2 - 10x + 1)(x^2 + 10x + 1) needs factor recombination
  Poly m = Poly::from_ints(Q, {1, -10, 1}) * Poly::from_ints(Q, {1, 10, 1});
  fac = factor(m, rng);
  CHECK(fac.factors.size() == 2);
  CHECK(reassemble(fac, Q) == m);
  // non-monic with rational coefficients and a unit
  Poly g = Poly(Q, {Scalar(1, 2), Scalar(3), Scalar(5, 2)});
  fac = factor(g, rng);
  CHECK(reassemble(fac, Q) == g);
  for (const auto& [p, e] : fac.factors) CHECK(p.is_monic());
  // degree cap
  std::vector<long> big(66, 0);
  big[0] = -2;
  big[65] = 1;  // x^65 - 2, irreducible by Eisenstein
  CHECK_THROWS_AS((void)factor(Poly::from_ints(Q, big), rng), DegreeCapError);
  CHECK_THROWS_AS((void)is_irreducible(Poly::from_ints(Q, big), rng), DegreeCapError);
}

TEST_CASE("irreducibility matches exhaustive trial division") {
  std::mt19937_64 rng(16);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Field F = Field::prime(p);
    // every monic polynomial of degree 2..4
    for (int deg = 2; deg <= 4; ++deg) {
      std::vector<std::uint32_t> digits(static_cast<std::size_t>(deg), 0);
      for (;;) {
        std::vector<Scalar> cs;
        for (std::uint32_t d : digits) cs.push_back(F.from_long(d));
        cs.push_back(F.one());
        Poly f(F, cs);
        CHECK(is_irreducible(f, rng) == trial_division_irreducible(f));
        int carry = 0;
        while (carry < deg) {
          std::size_t i = static_cast<std::size_t>(carry);
          if (++digits[i] < p) break;
          digits[i] = 0;
          ++carry;
        }
        if (carry == deg) break;
      }
    }
  }
}

TEST_CASE("factor-product identity on random polynomials") {
  std::mt19937_64 rng(17);
  for (const Field& F :
       {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(7919)}) {
    for (int iter = 0; iter < 150; ++iter) {
      Poly f = random_poly(F, 8, rng);
      if (f.degree() < 1) continue;
      Factorization fac = factor(f, rng);
      CHECK(reassemble(fac, F) == f);
      for (const auto& [g, e] : fac.factors) {
        CHECK(g.is_monic());
        CHECK(e >= 1);
        CHECK(is_irreducible(g, rng));
      }
      CHECK(std::is_sorted(fac.factors.begin(), fac.factors.end()));
    }
  }
}

TEST_CASE("x^p - x splits into all linear factors over GF(p)") {
  std::mt19937_64 rng(18);
  Field F5 = Field::prime(5);
  std::vector<long> cs(6, 0);
  cs[1] = -1;
  cs[5] = 1;
  Factorization fac = factor(Poly::from_ints(F5, cs), rng);
  CHECK(fac.factors.size() == 5);
  for (const auto& [g, e] : fac.factors) {
    CHECK(g.degree() == 1);
    CHECK(e == 1);
  }
}

TEST_CASE("companion matrices invert the characteristic polynomial map") {
  std::mt19937_64 rng(19);
  Field Q = Field::rationals();
  Poly f = Poly::from_ints(Q, {1, -2, 0, 1});  // monic cubic
  CHECK(companion(f).char_poly() == f);
  CHECK(companion(Poly::from_ints(Q, {1, -2, 1})) == Matrix::from_ints(Q, {{0, -1}, {1, 2}}));
  // companion_block(f, n): reversed char poly is f^n, primary decomposition is one block
  Field F5 = Field::prime(5);
  Poly g = Poly::from_ints(F5, {1, 1, 2});  // rev(g) = x^2 + x + 2 irreducible
  Matrix b = companion_block(g, 3, rng);
  CHECK(b.rows() == 6);
  CHECK(b.reversed_char_poly() == g * g * g);
  std::vector<PrimaryPart> pd = primary_decomposition(b, rng);
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].f == g);
  CHECK(pd[0].blocks == std::vector<std::pair<unsigned, std::size_t>>{{3, 1}});
  CHECK_THROWS_AS((void)companion_block(Poly::from_ints(F5, {2, 1}), 1, rng),
                  std::invalid_argument);  // constant term != 1
  CHECK_THROWS_AS((void)companion_block(Poly::from_ints(F5, {1, 0, 0, 0, 1}), 1, rng),
                  std::invalid_argument);  // x^4 + 1 reducible over GF(5)
}

TEST_CASE("primary decomposition recovers a planted block structure") {
  std::mt19937_64 rng(20);
  for (const Field& F : {Field::rationals(), Field::prime(5)}) {
    Poly f1 = Poly::from_ints(F, {1, -1});          // 1 - x
    Poly f2 = Poly::from_ints(F, {1, 1, 1});        // rev = x^2+x+1, irreducible over Q and GF(5)
    Matrix planted = Matrix::block_diag(
        F, {companion_block(f1, 2, rng), companion_block(f1, 1, rng),
            companion_block(f1, 1, rng), companion_block(f2, 2, rng)});
    Matrix t = random_invertible(F, planted.rows(), rng);
    Matrix conj = *t.inverse() * planted * t;
    std::vector<PrimaryPart> pd = primary_decomposition(conj, rng);
    REQUIRE(pd.size() == 2);
    CHECK(pd[0].f == f1);
    CHECK(pd[0].blocks == std::vector<std::pair<unsigned, std::size_t>>{{1, 2}, {2, 1}});
    CHECK(pd[1].f == f2);
    CHECK(pd[1].blocks == std::vector<std::pair<unsigned, std::size_t>>{{2, 1}});
  }
}

TEST_CASE("primary decomposition partition identity on random invertible matrices") {
  std::mt19937_64 rng(21);
  for (const Field& F : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (int iter = 0; iter < 25; ++iter) {
      std::size_t n = 1 + lpa::testing::pick(rng, 6);
      Matrix m = random_invertible(F, n, rng);
      std::vector<PrimaryPart> pd = primary_decomposition(m, rng);
      std::size_t total = 0;
      Poly recomposed(F, {F.one()});
      for (const PrimaryPart& part : pd) {
        std::size_t weight = 0;
        unsigned max_n = 0;
        for (const auto& [k, count] : part.blocks) {
          weight += k * count;
          max_n = std::max(max_n, k);
        }
        total += static_cast<std::size_t>(part.f.degree()) * weight;
        for (std::size_t i = 0; i < weight; ++i) recomposed = recomposed * part.f;
        // the generalized kernel of rev(part.f)(m)^max_n has full primary dimension
        Poly g = part.f.reversed();
        g = g * Poly(F, {F.inv(g.coeff(g.degree()))});  // monic normalization
        Matrix eval = evaluate_poly(g, m);
        Matrix powered = Matrix::identity(F, n);
        for (unsigned i = 0; i < max_n; ++i) powered = powered * eval;
        CHECK(n - powered.rank() == static_cast<std::size_t>(part.f.degree()) * weight);
      }
      CHECK(total == n);
      CHECK(m.reversed_char_poly() == recomposed);
      CHECK_THROWS_AS((void)primary_decomposition(Matrix(F, 2, 2), rng), std::invalid_argument);
    }
  }
}
