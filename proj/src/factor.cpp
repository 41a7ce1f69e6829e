#include "lpa/factor.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>

namespace lpa {

namespace {

struct ExtGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& k = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(k, k.one()), s1 = Poly::zero(k);
  Poly t0 = Poly::zero(k), t1 = Poly::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = k.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// ---- GF(p) ----

// f with zero derivative, so every exponent is a multiple of p. On a prime
// field the coefficientwise p-th root is the identity.
Poly pth_root(const Poly& f) {
  const Field& k = f.field();
  std::size_t p = k.modulus();
  std::vector<Scalar> out(static_cast<std::size_t>(f.degree()) / p + 1, k.zero());
  for (int i = 0; i <= f.degree(); ++i) {
    Scalar c = f.coeff(i);
    if (!k.is_zero(c)) out[static_cast<std::size_t>(i) / p] = c;
  }
  return Poly(k, std::move(out));
}

// Squarefree decomposition in characteristic p; appends (part, mult * i).
void squarefree_p(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  const Field& k = f.field();
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_p(pth_root(f), mult * k.modulus(), out);
    return;
  }
  Poly c = poly_gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_p(pth_root(c), mult * k.modulus(), out);
}

// Distinct-degree splitting of a monic squarefree f: (product, degree) pairs.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const Field& k = f.field();
  mpz_class p(k.modulus());
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::x(k);
  Poly h = x % f;
  int d = 0;
  while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
    ++d;
    h = powmod(h, p, f);
    Poly g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      if (f.degree() > 0) h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

Poly random_poly(const Field& k, int max_deg, std::mt19937_64& rng) {
  std::vector<Scalar> c(static_cast<std::size_t>(max_deg) + 1, k.zero());
  for (auto& ci : c) ci = Scalar(static_cast<unsigned long>(rng() % k.modulus()));
  return Poly(k, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting: every irreducible factor of the
// monic squarefree f has degree d.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& k = f.field();
  mpz_class pd;
  {
    mpz_class p(k.modulus());
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  }
  Poly split = Poly::zero(k);
  while (true) {
    Poly r = random_poly(k, f.degree() - 1, rng);
    if (r.is_zero()) continue;
    Poly g = poly_gcd(r, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split = g;
      break;
    }
    Poly s(k);
    if (k.modulus() == 2) {
      // trace map r + r^2 + ... + r^(2^(d-1))
      s = r % f;
      Poly sq = s;
      for (int i = 1; i < d; ++i) {
        sq = mulmod(sq, sq, f);
        s = s + sq;
      }
    } else {
      s = powmod(r, (pd - 1) / 2, f) - Poly::constant(k, k.one());
    }
    g = poly_gcd(s, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split = g;
      break;
    }
  }
  equal_degree(split, d, rng, out);
  equal_degree(f / split, d, rng, out);
}

// Monic irreducible factors with multiplicities, unsorted.
std::vector<std::pair<Poly, unsigned>> factor_gfp(const Poly& f, std::mt19937_64& rng) {
  std::vector<std::pair<Poly, unsigned>> squarefree;
  squarefree_p(f.monic(), 1, squarefree);
  std::vector<std::pair<Poly, unsigned>> out;
  for (const auto& [part, mult] : squarefree)
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<Poly> irred;
      equal_degree(prod, d, rng, irred);
      for (auto& g : irred) out.emplace_back(std::move(g), mult);
    }
  return out;
}

// ---- rationals ----

// Integer polynomials, low-to-high, no trailing zeros. A zero modulus means
// plain integer arithmetic.
using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zp_reduce(ZPoly& a, const mpz_class& m) {
  if (m != 0)
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  zp_trim(a);
}

ZPoly zp_add(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  zp_reduce(a, m);
  return a;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  zp_reduce(a, m);
  return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_reduce(r, m);
  return r;
}

// Division by a monic divisor (leading coefficient exactly 1).
std::pair<ZPoly, ZPoly> zp_divmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  std::size_t db = b.size() - 1;
  if (a.size() <= db) return {{}, std::move(a)};
  ZPoly q(a.size() - db, mpz_class(0));
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] -= c * b[j];
      if (m != 0)
        mpz_fdiv_r(a[i - db + j].get_mpz_t(), a[i - db + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  a.resize(db);
  zp_trim(a);
  return {std::move(q), std::move(a)};
}

ZPoly poly_to_z(const Poly& f) {
  ZPoly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(c.get_num());
  return r;
}

Poly z_to_poly(const Field& k, const ZPoly& a) {
  std::vector<Scalar> c;
  c.reserve(a.size());
  for (const auto& v : a) c.emplace_back(v);
  return Poly(k, std::move(c));
}

// Yun squarefree decomposition in characteristic zero: (part, multiplicity)
// with monic squarefree pairwise coprime parts.
std::vector<std::pair<Poly, unsigned>> yun(const Poly& f) {
  Poly fp = f.derivative();
  Poly u = poly_gcd(f, fp);
  Poly v = f / u;
  Poly w = fp / u;
  unsigned i = 1;
  std::vector<std::pair<Poly, unsigned>> out;
  while (v.degree() > 0) {
    Poly z = w - v.derivative();
    Poly h = poly_gcd(v, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    v = v / h;
    w = z / h;
    ++i;
  }
  return out;
}

struct HenselNode {
  ZPoly f;     // product of the leaves below, mod the current modulus
  ZPoly s, t;  // s*left.f + t*right.f = 1 mod the current modulus
  int left = -1, right = -1;
};

int build_tree(std::vector<HenselNode>& nodes, const std::vector<ZPoly>& leaves,
               std::size_t lo, std::size_t hi, const Field& kp, const mpz_class& p,
               std::vector<int>& leaf_nodes) {
  int idx = static_cast<int>(nodes.size());
  nodes.emplace_back();
  if (hi - lo == 1) {
    nodes[idx].f = leaves[lo];
    leaf_nodes[lo] = idx;
    return idx;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  int l = build_tree(nodes, leaves, lo, mid, kp, p, leaf_nodes);
  int r = build_tree(nodes, leaves, mid, hi, kp, p, leaf_nodes);
  nodes[idx].left = l;
  nodes[idx].right = r;
  nodes[idx].f = zp_mul(nodes[l].f, nodes[r].f, p);
  ExtGcd e = ext_gcd(z_to_poly(kp, nodes[l].f), z_to_poly(kp, nodes[r].f));
  nodes[idx].s = poly_to_z(e.s);
  nodes[idx].t = poly_to_z(e.t);
  return idx;
}

// One quadratic lifting step: the subtree below ni is correct mod m; fv is
// this node's product mod m2 = m^2. Afterwards the subtree is correct mod m2.
void lift_node(std::vector<HenselNode>& nodes, int ni, ZPoly fv, const mpz_class& m2) {
  HenselNode& nd = nodes[ni];
  nd.f = std::move(fv);
  if (nd.left < 0) return;
  ZPoly g = nodes[nd.left].f;
  ZPoly h = nodes[nd.right].f;
  ZPoly e = zp_sub(nd.f, zp_mul(g, h, m2), m2);
  auto [q, r] = zp_divmod_monic(zp_mul(nd.s, e, m2), h, m2);
  ZPoly hstar = zp_add(h, r, m2);
  ZPoly gstar = zp_add(g, zp_add(zp_mul(nd.t, e, m2), zp_mul(q, g, m2), m2), m2);
  ZPoly b = zp_sub(zp_add(zp_mul(nd.s, gstar, m2), zp_mul(nd.t, hstar, m2), m2),
                   ZPoly{mpz_class(1)}, m2);
  auto [c, d] = zp_divmod_monic(zp_mul(nd.s, b, m2), hstar, m2);
  nd.s = zp_sub(nd.s, d, m2);
  nd.t = zp_sub(nd.t, zp_add(zp_mul(nd.t, b, m2), zp_mul(c, gstar, m2), m2), m2);
  lift_node(nodes, nd.left, std::move(gstar), m2);
  lift_node(nodes, nd.right, std::move(hstar), m2);
}

mpz_class zp_symmetric(const mpz_class& c, const mpz_class& m) {
  return 2 * c > m ? mpz_class(c - m) : c;
}

// Monic irreducible rational factors of a monic squarefree q with
// deg q >= 2, via Hensel lifting from a good prime.
std::vector<Poly> factor_squarefree_q(const Poly& q, std::mt19937_64& rng) {
  const Field& Q = q.field();
  int n = q.degree();

  // primitive integer form F with positive leading coefficient
  mpz_class denlcm(1);
  for (const auto& c : q.coeffs())
    mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly F;
  F.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) {
    Scalar v(c * denlcm);  // integral by choice of denlcm
    F.push_back(v.get_num());
  }
  mpz_class content(0);
  for (const auto& c : F) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : F) c /= content;
  mpz_class lc = F.back();  // positive: q monic, denlcm and content positive

  // monic integer model G(x) = lc^(n-1) F(x/lc); factors map back by the
  // inverse substitution
  ZPoly G(F.size());
  G[static_cast<std::size_t>(n)] = 1;
  {
    mpz_class pw(1);
    for (int i = n - 1; i >= 0; --i) {
      G[static_cast<std::size_t>(i)] = F[static_cast<std::size_t>(i)] * pw;
      pw *= lc;
    }
  }

  auto back_substitute = [&](const ZPoly& H) {
    int d = static_cast<int>(H.size()) - 1;
    std::vector<Scalar> coeffs(H.size());
    mpz_class pw(1);  // lc^(d-i) running from the top
    for (int i = d; i >= 0; --i) {
      Scalar c(H[static_cast<std::size_t>(i)], pw);
      c.canonicalize();
      coeffs[static_cast<std::size_t>(i)] = c;
      pw *= lc;
    }
    return Poly(Q, std::move(coeffs));
  };

  // good prime: G stays squarefree mod p; prefer the candidate with the
  // fewest modular factors among the first few
  std::vector<Poly> best_factors;
  std::uint32_t best_p = 0;
  int good = 0;
  for (std::uint32_t p = 3; good < 3; p += 2) {
    while (!is_prime_u32(p)) p += 2;
    Field kp = Field::prime(p);
    ZPoly gmod = G;
    zp_reduce(gmod, mpz_class(p));
    Poly gp = z_to_poly(kp, gmod);
    if (poly_gcd(gp, gp.derivative()).degree() != 0) continue;
    auto fac = factor_gfp(gp, rng);
    if (fac.size() == 1) return {q};  // irreducible already mod p
    if (best_p == 0 || fac.size() < best_factors.size()) {
      best_p = p;
      best_factors.clear();
      for (auto& [g, e] : fac) best_factors.push_back(g);
    }
    ++good;
  }

  // coefficient bound for monic factors of G (Mignotte): 2^n * ||G||_2
  mpz_class norm2(0);
  for (const auto& c : G) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= n;
  mpz_class target = 2 * bound + 1;

  Field kp = Field::prime(best_p);
  std::vector<ZPoly> leaves;
  leaves.reserve(best_factors.size());
  for (const auto& g : best_factors) leaves.push_back(poly_to_z(g));
  std::vector<HenselNode> nodes;
  std::vector<int> leaf_nodes(leaves.size(), -1);
  mpz_class modulus(best_p);
  int root = build_tree(nodes, leaves, 0, leaves.size(), kp, modulus, leaf_nodes);
  while (modulus < target) {
    mpz_class m2 = modulus * modulus;
    ZPoly gm = G;
    zp_reduce(gm, m2);
    lift_node(nodes, root, std::move(gm), m2);
    modulus = m2;
  }

  // Zassenhaus recombination over subsets of the lifted factors
  std::vector<std::size_t> active(leaves.size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  Poly remaining = z_to_poly(Q, G);
  std::vector<Poly> found;

  auto candidate_for = [&](const std::vector<std::size_t>& subset) {
    ZPoly prod{mpz_class(1)};
    for (std::size_t i : subset) prod = zp_mul(prod, nodes[leaf_nodes[active[i]]].f, modulus);
    for (auto& c : prod) c = zp_symmetric(c, modulus);
    return z_to_poly(Q, prod);
  };

  for (std::size_t csize = 1; 2 * csize <= active.size();) {
    std::vector<std::size_t> idx(csize);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    bool removed = false;
    while (true) {
      Poly cand = candidate_for(idx);
      Scalar c0 = cand.constant_term(), r0 = remaining.constant_term();
      bool plausible = true;
      if (!Q.is_zero(c0) && !Q.is_zero(r0))
        plausible = mpz_divisible_p(r0.get_num().get_mpz_t(), c0.get_num().get_mpz_t()) != 0;
      else if (Q.is_zero(c0) && !Q.is_zero(r0))
        plausible = false;
      if (plausible && cand.divides(remaining)) {
        remaining = remaining / cand;
        found.push_back(back_substitute(poly_to_z(cand)));
        std::vector<std::size_t> keep;
        for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(active[i]);
        }
        active = std::move(keep);
        removed = true;
        break;
      }
      // next subset of the same size
      std::size_t k = csize;
      while (k-- > 0) {
        if (idx[k] + (csize - k) < active.size()) {
          ++idx[k];
          for (std::size_t j = k + 1; j < csize; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (k == 0) goto exhausted;
      }
    }
  exhausted:
    if (!removed) ++csize;
  }
  if (remaining.degree() > 0) found.push_back(back_substitute(poly_to_z(remaining)));
  return found;
}

std::vector<std::pair<Poly, unsigned>> factor_q(const Poly& f, std::mt19937_64& rng) {
  std::vector<std::pair<Poly, unsigned>> out;
  for (const auto& [part, mult] : yun(f.monic())) {
    if (part.degree() == 1) {
      out.emplace_back(part, mult);
      continue;
    }
    for (auto& g : factor_squarefree_q(part, rng)) out.emplace_back(std::move(g), mult);
  }
  return out;
}

}  // namespace

Factorization factor(const Poly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  if (f.degree() == 0) return result;
  if (f.field().is_rationals()) {
    if (f.degree() > kFactorDegreeCap)
      throw DegreeCapError("factoring over the rationals is limited to degree " +
                           std::to_string(kFactorDegreeCap));
    result.factors = factor_q(f, rng);
  } else {
    result.factors = factor_gfp(f, rng);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              auto c = a.first <=> b.first;
              if (c != 0) return c < 0;
              return a.second < b.second;
            });
  return result;
}

bool is_irreducible(const Poly& f, std::mt19937_64& rng) {
  if (f.degree() < 1) return false;
  Factorization fac = factor(f, rng);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

Matrix companion(const Poly& p) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("companion matrix needs a monic polynomial");
  const Field& k = p.field();
  std::size_t d = static_cast<std::size_t>(p.degree());
  Matrix m(k, d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.set(i + 1, i, k.one());
  for (std::size_t i = 0; i < d; ++i) m.set(i, d - 1, k.neg(p.coeff(static_cast<int>(i))));
  return m;
}

std::vector<PrimaryPart> primary_decomposition(const Matrix& m, std::mt19937_64& rng) {
  if (!m.is_square()) throw std::invalid_argument("primary decomposition needs a square matrix");
  Poly chi = m.char_poly();
  if (chi.degree() > 0 && m.field().is_zero(chi.constant_term()))
    throw std::invalid_argument("primary decomposition needs an invertible matrix");
  Factorization fac = factor(chi, rng);
  std::vector<PrimaryPart> out;
  for (const auto& [g, a] : fac.factors) {
    std::size_t d = static_cast<std::size_t>(g.degree());
    PrimaryPart part{g.reversed(), {}};
    if (a == 1) {
      part.blocks.emplace_back(1u, std::size_t{1});
      out.push_back(std::move(part));
      continue;
    }
    // nullity chain of g(m)^k; blocks of power exactly k are counted by the
    // second difference
    Matrix gm = evaluate_poly(g, m);
    std::vector<std::size_t> nullity{0};
    Matrix pw = gm;
    for (unsigned k = 1; k <= a; ++k) {
      std::size_t nk = m.rows() - pw.rank();
      nullity.push_back(nk);
      if (nk == nullity[k - 1]) break;
      if (k < a) pw = pw * gm;
    }
    nullity.push_back(nullity.back());
    for (unsigned k = 1; k + 1 < nullity.size(); ++k) {
      std::size_t at_least_k = nullity[k] - nullity[k - 1];
      std::size_t at_least_k1 = nullity[k + 1] - nullity[k];
      std::size_t exact = (at_least_k - at_least_k1) / d;
      if (exact > 0) part.blocks.emplace_back(k, exact);
    }
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(),
            [](const PrimaryPart& a, const PrimaryPart& b) { return a.f < b.f; });
  return out;
}

Matrix companion_block(const Poly& f, unsigned n, std::mt19937_64& rng) {
  const Field& k = f.field();
  if (f.is_zero() || !k.is_one(f.constant_term()))
    throw std::invalid_argument("companion block needs constant term 1");
  if (n == 0) throw std::invalid_argument("companion block needs a positive power");
  Poly g = f.reversed();  // monic since f(0) = 1
  if (!is_irreducible(g, rng))
    throw std::invalid_argument("companion block needs an irreducible reversal");
  return companion(g.pow(n));
}

}  // namespace lpa
