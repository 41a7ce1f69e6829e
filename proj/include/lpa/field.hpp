#ifndef LPA_FIELD_HPP_
#define LPA_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lpa {

// Exact field element. Rational always; prime-field elements are stored as
// integers in [0, p) with denominator 1.
using Scalar = mpq_class;

// The coefficient field: the rationals (p == 0) or GF(p) for a prime p < 2^31.
// All arithmetic on Scalars is routed through a Field so prime-field values
// stay in canonical form.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const;

  // Canonicalize an arbitrary rational into this field. For GF(p) the
  // denominator is inverted mod p; throws if it is divisible by p.
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws std::domain_error on 0
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  std::string describe() const;  // "Q" or "GF(p)"

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// Deterministic Miller-Rabin, valid for all n < 2^32.
bool is_prime_u32(std::uint32_t n);

}  // namespace lpa

#endif  // LPA_FIELD_HPP_
