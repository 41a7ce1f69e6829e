#include "lpa/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {

Poly::Poly(Field f, std::vector<Scalar> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::constant(const Field& f, const Scalar& c) {
  return Poly(f, std::vector<Scalar>{c});
}

Poly Poly::x(const Field& f) {
  return Poly(f, std::vector<Scalar>{f.zero(), f.one()});
}

Poly Poly::from_ints(const Field& f, const std::vector<long>& coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (long v : coeffs) cs.push_back(f.from_long(v));
  return Poly(f, std::move(cs));
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[i];
}

Scalar Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_monic() const {
  return !coeffs_.empty() && field_.is_one(coeffs_.back());
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(field_.neg(c));
  return r;
}

static void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("polynomial field mismatch");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Scalar> cs(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = f.add(a.coeff((int)i), b.coeff((int)i));
  return Poly(f, std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Scalar> cs(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = f.sub(a.coeff((int)i), b.coeff((int)i));
  return Poly(f, std::move(cs));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  std::vector<Scalar> cs(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (f.is_zero(a.coeffs()[i])) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      cs[i + j] = f.add(cs[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(f, std::move(cs));
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field() == b.field() && a.coeffs() == b.coeffs();
}

Poly Poly::scaled(const Scalar& c) const {
  Scalar cc = field_.reduce(c);
  Poly r(field_);
  if (field_.is_zero(cc)) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.coeffs_.push_back(field_.mul(a, cc));
  r.normalize();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  if (is_monic()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::pow(unsigned long e) const {
  Poly r = Poly::constant(field_, field_.one());
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(field_.mul(coeffs_[i], field_.from_long((long)i)));
  r.normalize();
  return r;
}

Scalar Poly::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (size_t i = coeffs_.size(); i-- > 0;)
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_field(*this, divisor);
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = field_;
  Poly rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {Poly::zero(f), rem};
  Scalar lcinv = f.inv(divisor.leading());
  std::vector<Scalar> q((size_t)(rem.degree() - dd + 1), f.zero());
  while (!rem.is_zero() && rem.degree() >= dd) {
    int shift = rem.degree() - dd;
    Scalar c = f.mul(rem.leading(), lcinv);
    q[(size_t)shift] = c;
    // rem -= c * x^shift * divisor
    for (int i = 0; i <= dd; ++i) {
      size_t k = (size_t)(i + shift);
      rem.coeffs_[k] = f.sub(rem.coeffs_[k], f.mul(c, divisor.coeffs_[(size_t)i]));
    }
    rem.normalize();
  }
  return {Poly(f, std::move(q)), rem};
}

bool Poly::divides(const Poly& numerator) const {
  if (is_zero()) return numerator.is_zero();
  return numerator.divmod(*this).second.is_zero();
}

Poly Poly::reversed() const {
  if (is_zero() || field_.is_zero(coeffs_[0]))
    throw std::domain_error("reversal requires a nonzero constant term");
  std::vector<Scalar> cs(coeffs_.rbegin(), coeffs_.rend());
  return Poly(field_, std::move(cs));
}

std::strong_ordering Poly::operator<=>(const Poly& rhs) const {
  if (degree() != rhs.degree())
    return degree() < rhs.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], rhs.coeffs_[i]);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !field_.is_one(coeffs_[i])) os << coeffs_[i].get_str();
    if (i > 0) {
      if (!field_.is_one(coeffs_[i])) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  if (sgn(e) < 0) throw std::invalid_argument("powmod exponent must be nonnegative");
  Poly r = Poly::constant(base.field(), base.field().one()) % m;
  Poly b = base % m;
  mpz_class k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    k >>= 1;
  }
  return r;
}

}  // namespace lpa
