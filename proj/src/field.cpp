#include "lpa/field.hpp"

namespace lpa {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 3, 5, 7 are exact for n < 3'215'031'751 > 2^31.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    throw std::invalid_argument("prime-field modulus must be < 2^31");
  if (!is_prime_u32(p))
    throw std::invalid_argument("prime-field modulus " + std::to_string(p) +
                                " is not prime");
  return Field(p);
}

Scalar Field::from_long(long v) const {
  if (p_ == 0) return Scalar(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(r);
}

Scalar Field::reduce(const Scalar& v) const {
  if (p_ == 0) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_);
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  if (v.get_den() == 1) return Scalar(num);
  mpz_class den = v.get_den() % p;
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator divisible by field characteristic");
  return Scalar(mpz_class(num * deninv % p));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num() % p_;
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  mpz_class r = p_ - a.get_num();
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero field element");
  if (p_ == 0) return 1 / a;
  mpz_class p(p_), r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::describe() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace lpa
