// Shared fixtures, random generators, and independent oracles for the test
// binaries. Oracles deliberately recompute results by a different method
// than the library (matrix powers for path counts, trial division for
// irreducibility, cofactor expansion for characteristic polynomials).
#ifndef LPA_TESTS_TEST_SUPPORT_HPP_
#define LPA_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpa/classify.hpp"
#include "lpa/monoid.hpp"
#include "lpa/quiverrep.hpp"
#include "lpa/reduction.hpp"

namespace lpa::testing {

// --- fixtures -------------------------------------------------------------

// Running example: two-cycle cluster {w,x} beside a lane u -> v -> y.
inline Digraph make_g0() {
  Digraph g;
  for (auto v : {"u", "v", "w", "x", "y"}) g.add_vertex(v);
  g.add_arrow("a1", "u", "w");
  g.add_arrow("a2", "u", "v");
  g.add_arrow("a3", "u", "v");
  g.add_arrow("b1", "v", "y");
  g.add_arrow("c1", "w", "x");
  g.add_arrow("c2", "w", "x");
  g.add_arrow("c3", "w", "x");
  g.add_arrow("d1", "x", "w");
  g.add_arrow("d2", "x", "w");
  return g;
}

// Two 2-cycles sharing the middle vertex v; no maximal sinks or cycles.
inline Digraph make_g1() {
  Digraph g;
  for (auto v : {"u", "v", "w"}) g.add_vertex(v);
  g.add_arrow("e1", "u", "v");
  g.add_arrow("e2", "v", "u");
  g.add_arrow("e3", "v", "w");
  g.add_arrow("e4", "w", "v");
  return g;
}

// Loop with an exit into a (non-maximal) sink.
inline Digraph make_gt() {
  Digraph g;
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_arrow("e", "u", "u");
  g.add_arrow("g1", "u", "w");
  return g;
}

// Single loop.
inline Digraph make_gl() {
  Digraph g;
  g.add_vertex("v");
  g.add_arrow("e", "v", "v");
  return g;
}

// Disjoint maximal sink s and maximal cycle at v, fed by t.
inline Digraph make_g2() {
  Digraph g;
  for (auto v : {"s", "t", "v"}) g.add_vertex(v);
  g.add_arrow("e", "v", "v");
  g.add_arrow("h", "t", "s");
  g.add_arrow("k", "t", "v");
  return g;
}

// --- random generators ------------------------------------------------------

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Digraph random_digraph(std::mt19937_64& rng, std::size_t max_v, std::size_t max_a) {
  Digraph g;
  std::size_t nv = 1 + pick(rng, max_v);
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < nv; ++i) {
    vs.push_back("v" + std::to_string(i));
    g.add_vertex(vs.back());
  }
  std::size_t na = pick(rng, max_a + 1);
  for (std::size_t i = 0; i < na; ++i)
    g.add_arrow("a" + std::to_string(i), vs[pick(rng, nv)], vs[pick(rng, nv)]);
  return g;
}

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rationals()) return Scalar(static_cast<long>(pick(rng, 7)) - 3);
  return f.from_long(static_cast<long>(pick(rng, f.modulus())));
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(f, rng));
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Matrix m = random_matrix(f, n, n, rng);
    if (m.is_invertible()) return m;
  }
  return Matrix::identity(f, n);  // unreachable in practice
}

inline Poly random_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
  int deg = static_cast<int>(pick(rng, static_cast<std::size_t>(max_deg) + 1));
  std::vector<Scalar> cs;
  for (int i = 0; i <= deg; ++i) cs.push_back(random_scalar(f, rng));
  return Poly(f, cs);
}

// A random dimension function: a random small N-combination of the basis.
inline DimensionFunction random_dimension_function(const Digraph& g, std::mt19937_64& rng,
                                                   unsigned long max_coeff = 2) {
  DimensionFunction d;
  for (const std::string& v : g.vertices()) d[v] = 0;
  for (const DimensionBasisElement& b : dimension_basis(g)) {
    mpz_class c(static_cast<unsigned long>(pick(rng, max_coeff + 1)));
    for (const auto& [v, n] : b.d) d[v] += c * n;
  }
  return d;
}

// A random representation satisfying condition (I): dimensions from a random
// dimension function, arrow blocks sliced from a random invertible matrix at
// each non-sink.
inline QuiverRep random_cond_I_rep(const Digraph& g, const Field& f, std::mt19937_64& rng,
                                   unsigned long max_coeff = 2) {
  DimensionFunction d = random_dimension_function(g, rng, max_coeff);
  std::map<std::string, std::size_t> dims;
  for (const auto& [v, n] : d) dims[v] = n.get_ui();
  std::map<std::string, Matrix> mats;
  for (const std::string& v : g.vertices()) {
    if (g.is_sink(v)) continue;
    Matrix m = random_invertible(f, dims[v], rng);
    std::size_t off = 0;
    for (const std::string& e : g.out_arrows(v)) {
      std::size_t w = dims[g.arrow(e).target];
      mats.emplace(e, m.submatrix(0, off, dims[v], w));
      off += w;
    }
  }
  return QuiverRep(g, f, std::move(dims), std::move(mats));
}

// A random morphism r -> s: a random element of the intertwiner space,
// found by solving the linear system with right_kernel.
inline RepMorphism random_morphism(const QuiverRep& r, const QuiverRep& s, std::mt19937_64& rng);

// --- oracles ---------------------------------------------------------------

// All simple cycles by brute force: enumerate arrow walks with pairwise
// distinct sources that return to the start, dedup by canonical rotation.
inline std::set<std::vector<std::string>> brute_force_cycles(const Digraph& g) {
  std::set<std::vector<std::string>> out;
  std::vector<std::string> walk;
  std::set<std::string> used_sources;

  auto canonical = [](std::vector<std::string> arrows, const Digraph& gg) {
    std::size_t best = 0;
    std::string best_v = gg.arrow(arrows[0]).source;
    for (std::size_t i = 1; i < arrows.size(); ++i)
      if (gg.arrow(arrows[i]).source < best_v) {
        best = i;
        best_v = gg.arrow(arrows[i]).source;
      }
    std::rotate(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(best), arrows.end());
    return arrows;
  };

  std::function<void(const std::string&, const std::string&)> dfs =
      [&](const std::string& start, const std::string& cur) {
        for (const std::string& e : g.out_arrows(cur)) {
          const Arrow& a = g.arrow(e);
          if (a.target == start) {
            walk.push_back(e);
            out.insert(canonical(walk, g));
            walk.pop_back();
          } else if (!used_sources.count(a.target)) {
            used_sources.insert(a.target);
            walk.push_back(e);
            dfs(start, a.target);
            walk.pop_back();
            used_sources.erase(a.target);
          }
        }
      };
  for (const std::string& v : g.vertices()) {
    used_sources = {v};
    dfs(v, v);
  }
  return out;
}

// Path counting by matrix powers: counts[z] = sum_k (A^k)[z][base] in the
// graph with cut_arrow removed; divergence whenever some vertex that lies on
// a z -> base walk also lies on a closed walk.
struct PathOracle {
  std::map<std::string, mpz_class> counts;
  std::set<std::string> divergent;
};

inline PathOracle brute_force_paths(const Digraph& g, const std::string& base,
                                    const std::string& cut_arrow) {
  const std::vector<std::string>& vs = g.vertices();
  std::size_t n = vs.size();
  auto idx = [&vs](const std::string& v) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Arrow& a : g.arrows()) {
    if (a.id == cut_arrow) continue;
    A[idx(a.source)][idx(a.target)] += 1;
    reach[idx(a.source)][idx(a.target)] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  std::size_t b = idx(base);
  PathOracle out;
  for (std::size_t z = 0; z < n; ++z) {
    bool div = false;
    for (std::size_t u = 0; u < n && !div; ++u) {
      bool on_route = (z == u || reach[z][u]) && (u == b || reach[u][b]);
      if (on_route && reach[u][u]) div = true;
    }
    if (div) out.divergent.insert(vs[z]);
  }
  // sum of A^k for k = 0..n-1; only meaningful for non-divergent vertices
  std::vector<std::vector<mpz_class>> power(n, std::vector<mpz_class>(n, 0)),
      total(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1, total[i][i] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * A[l][j];
    power = std::move(next);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] += power[i][j];
  }
  for (std::size_t z = 0; z < n; ++z)
    if (!out.divergent.count(vs[z]) && (total[z][b] != 0 || z == b))
      out.counts[vs[z]] = total[z][b];
  return out;
}

// Irreducibility over GF(p) by exhaustive trial division with all monic
// divisors of degree 1..deg/2.
inline bool trial_division_irreducible(const Poly& f) {
  const Field& F = f.field();
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  std::uint32_t p = F.modulus();
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<Scalar> cs(static_cast<std::size_t>(d) + 1, F.zero());
    cs.back() = F.one();
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
      for (int i = 0; i < d; ++i) cs[static_cast<std::size_t>(i)] = F.from_long(digits[static_cast<std::size_t>(i)]);
      Poly divisor(F, cs);
      auto [q, r] = f.divmod(divisor);
      if (r.is_zero()) return false;
      int carry = 0;
      while (carry < d) {
        std::size_t i = static_cast<std::size_t>(carry);
        if (++digits[i] < p) break;
        digits[i] = 0;
        ++carry;
      }
      if (carry == d) break;
    }
  }
  return true;
}

// Characteristic polynomial det(xI - m) by cofactor expansion over Poly.
inline Poly cofactor_char_poly(const Matrix& m) {
  const Field& F = m.field();
  std::size_t n = m.rows();
  std::vector<std::vector<Poly>> P(n, std::vector<Poly>(n, Poly(F, {})));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> cs{F.neg(m.at(i, j))};
      if (i == j) cs.push_back(F.one());
      P[i][j] = Poly(F, cs);
    }
  std::function<Poly(std::vector<std::size_t>, std::vector<std::size_t>)> det =
      [&](std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
        if (rows.empty()) return Poly(F, {F.one()});
        Poly acc(F, {});
        for (std::size_t k = 0; k < rows.size(); ++k) {
          std::vector<std::size_t> r2(rows.begin() + 1, rows.end());
          std::vector<std::size_t> c2 = cols;
          c2.erase(c2.begin() + static_cast<std::ptrdiff_t>(k));
          Poly minor = P[rows[0]][cols[k]] * det(r2, c2);
          acc = (k % 2 == 0) ? acc + minor : acc - minor;
        }
        return acc;
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return det(all, all);
}

// Basis of Hom(r, s) as vertex-map tuples, by solving the intertwining
// equations with one big kernel computation.
inline std::vector<std::map<std::string, Matrix>> hom_space_basis(const QuiverRep& r,
                                                                  const QuiverRep& s) {
  const Field& F = r.field();
  const Digraph& g = r.graph();
  // unknowns: entries of phi(v), row-major, vertex blocks in order
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const std::string& v : g.vertices()) {
    offset[v] = total;
    total += r.dim(v) * s.dim(v);
  }
  std::vector<std::vector<Scalar>> eqs;  // each of length total
  for (const Arrow& a : g.arrows()) {
    const Matrix& A = r.arrow_matrix(a.id);
    const Matrix& B = s.arrow_matrix(a.id);
    // phi(se) B - A phi(te) = 0, entrywise (i, j)
    for (std::size_t i = 0; i < r.dim(a.source); ++i)
      for (std::size_t j = 0; j < s.dim(a.target); ++j) {
        std::vector<Scalar> eq(total, F.zero());
        for (std::size_t k = 0; k < s.dim(a.source); ++k)
          eq[offset[a.source] + i * s.dim(a.source) + k] =
              F.add(eq[offset[a.source] + i * s.dim(a.source) + k], B.at(k, j));
        for (std::size_t k = 0; k < r.dim(a.target); ++k)
          eq[offset[a.target] + k * s.dim(a.target) + j] =
              F.sub(eq[offset[a.target] + k * s.dim(a.target) + j], A.at(i, k));
        eqs.push_back(std::move(eq));
      }
  }
  Matrix sys(F, eqs.size(), total);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < total; ++j) sys.set(i, j, eqs[i][j]);
  std::vector<std::map<std::string, Matrix>> basis;
  for (const std::vector<Scalar>& k : sys.right_kernel()) {
    std::map<std::string, Matrix> maps;
    for (const std::string& v : g.vertices()) {
      Matrix phi(F, r.dim(v), s.dim(v));
      for (std::size_t i = 0; i < r.dim(v); ++i)
        for (std::size_t j = 0; j < s.dim(v); ++j)
          phi.set(i, j, k[offset[v] + i * s.dim(v) + j]);
      maps.emplace(v, std::move(phi));
    }
    basis.push_back(std::move(maps));
  }
  return basis;
}

inline RepMorphism random_morphism(const QuiverRep& r, const QuiverRep& s, std::mt19937_64& rng) {
  const Field& F = r.field();
  std::vector<std::map<std::string, Matrix>> basis = hom_space_basis(r, s);
  std::map<std::string, Matrix> maps;
  for (const std::string& v : r.graph().vertices())
    maps.emplace(v, Matrix(F, r.dim(v), s.dim(v)));
  for (const std::map<std::string, Matrix>& b : basis) {
    Scalar c = random_scalar(F, rng);
    for (auto& [v, m] : maps) m = m + b.at(v).scaled(c);
  }
  return RepMorphism(r, s, std::move(maps));
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_TEST_SUPPORT_HPP_
