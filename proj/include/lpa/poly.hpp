#ifndef LPA_POLY_HPP_
#define LPA_POLY_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"

namespace lpa {

// Dense univariate polynomial over an exact field. Coefficients are stored
// low-to-high with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Field& f, const Scalar& c);
  static Poly x(const Field& f);
  // c0 + c1 x + c2 x^2 + ... from machine integers.
  static Poly from_ints(const Field& f, const std::vector<long>& coeffs);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  Scalar leading() const;
  Scalar constant_term() const { return coeff(0); }
  bool is_monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;
  Poly monic() const;  // throws on zero polynomial
  Poly pow(unsigned long e) const;
  Poly derivative() const;
  Scalar evaluate(const Scalar& x) const;

  // Quotient and remainder; the divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& numerator) const;

  // Coefficient reversal x^deg * f(1/x). Requires a nonzero constant term,
  // so reversal is an involution on its domain. A monic f with f(0) != 0
  // reverses to the constant-term-1 normal form used by the classification,
  // and a constant-term-1 f reverses back to a monic polynomial.
  Poly reversed() const;

  // Deterministic order: degree first, then coefficients from low to high
  // (rationals by value, prime-field values by representative).
  std::strong_ordering operator<=>(const Poly& rhs) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  Field field_;
  std::vector<Scalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

// a*b mod m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
// base^e mod m with an arbitrary-precision exponent.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

}  // namespace lpa

#endif  // LPA_POLY_HPP_
