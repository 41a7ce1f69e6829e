#include "lpa/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lpa {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      entries_(rows * cols, field_.zero()) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix entry count does not match shape");
  for (auto& e : entries_) e = field_.reduce(e);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  Matrix m(f, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc)
      throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.entry(i, j) = f.from_long(rows[i][j]);
  }
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  return entry(r, c);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  entry(r, c) = field_.reduce(v);
}

static void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("matrix field mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in addition");
  Matrix r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.entry(i, j) = a.field().add(a.entry(i, j), b.entry(i, j));
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  Matrix r(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.entry(i, j) = a.field().sub(a.entry(i, j), b.entry(i, j));
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in product");
  const Field& f = a.field();
  Matrix r(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.entry(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.entry(i, j) = f.add(r.entry(i, j), f.mul(aik, b.entry(k, j)));
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field() == b.field() && a.rows() == b.rows() && a.cols() == b.cols() &&
         a.entries_ == b.entries_;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(field_, rows_, cols_);
  Scalar cc = field_.reduce(c);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    r.entries_[i] = field_.mul(entries_[i], cc);
  return r;
}

Matrix Matrix::hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == f)) throw std::invalid_argument("hstack field mismatch");
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix r(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.entry(i, off + j) = b.entry(i, j);
    off += b.cols();
  }
  return r;
}

Matrix Matrix::vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == f)) throw std::invalid_argument("vstack field mismatch");
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  Matrix r(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r.entry(off + i, j) = b.entry(i, j);
    off += b.rows();
  }
  return r;
}

Matrix Matrix::block_diag(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == f)) throw std::invalid_argument("block_diag field mismatch");
    rows += b.rows();
    cols += b.cols();
  }
  Matrix r(f, rows, cols);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.entry(ro + i, co + j) = b.entry(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_)
    throw std::out_of_range("submatrix range");
  Matrix r(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r.entry(i, j) = entry(r0 + i, c0 + j);
  return r;
}

namespace {

struct Echelon {
  std::vector<std::vector<Scalar>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

Echelon reduce(const Matrix& m) {
  const Field& f = m.field();
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), f.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);

  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(a[piv][col])) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[row]);
    Scalar inv = f.inv(a[row][col]);
    for (std::size_t j = col; j < m.cols(); ++j) a[row][j] = f.mul(a[row][j], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(a[i][col])) continue;
      Scalar factor = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::size_t Matrix::rank() const { return reduce(*this).pivot_cols.size(); }

std::vector<std::vector<Scalar>> Matrix::right_kernel() const {
  const Field& f = field_;
  Echelon e = reduce(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(cols_, f.zero());
    v[j] = f.one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = f.neg(e.rows[r][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const Field& f = field_;
  std::size_t n = rows_;
  Matrix aug = hstack(f, n, {*this, identity(f, n)});
  Echelon e = reduce(aug);
  if (e.pivot_cols.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (e.pivot_cols[i] != i) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.entry(i, j) = e.rows[i][n + j];
  return inv;
}

bool Matrix::is_invertible() const {
  return is_square() && rank() == rows_;
}

Scalar Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = field_;
  std::size_t n = rows_;
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = entry(i, j);
  Scalar d = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(a[piv][col])) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = f.neg(d);
    }
    d = f.mul(d, a[col][col]);
    Scalar inv = f.inv(a[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(a[i][col])) continue;
      Scalar factor = f.mul(a[i][col], inv);
      for (std::size_t j = col; j < n; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[col][j]));
    }
  }
  return d;
}

Poly Matrix::char_poly() const {
  if (!is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const Field& f = field_;
  std::size_t n = rows_;
  // Similarity reduction to upper Hessenberg form, then the standard
  // leading-principal-minor recurrence. Exact over any field.
  std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = entry(i, j);

  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && f.is_zero(h[piv][col])) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][col + 1]);
    }
    Scalar inv = f.inv(h[col + 1][col]);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (f.is_zero(h[i][col])) continue;
      Scalar factor = f.mul(h[i][col], inv);
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = f.sub(h[i][j], f.mul(factor, h[col + 1][j]));
      for (std::size_t r = 0; r < n; ++r)
        h[r][col + 1] = f.add(h[r][col + 1], f.mul(factor, h[r][i]));
    }
  }

  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, f.one()));
  Poly x = Poly::x(f);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly pm = (x - Poly::constant(f, h[m - 1][m - 1])) * p[m - 1];
    Scalar subdiag = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      subdiag = f.mul(subdiag, h[i][i - 1]);
      if (f.is_zero(subdiag)) break;
      Scalar c = f.mul(h[i - 1][m - 1], subdiag);
      pm = pm - p[i - 1].scaled(c);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

Poly Matrix::reversed_char_poly() const {
  Poly chi = char_poly();
  std::vector<Scalar> rev(chi.coeffs().rbegin(), chi.coeffs().rend());
  if (rev.empty()) rev.push_back(field_.one());  // 0x0 matrix
  return Poly(field_, std::move(rev));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << entry(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Matrix evaluate_poly(const Poly& f, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  if (!(f.field() == m.field())) throw std::invalid_argument("field mismatch");
  const Field& k = m.field();
  Matrix acc(k, m.rows(), m.rows());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * m;
    Scalar c = f.coeff(i);
    if (!k.is_zero(c)) {
      for (std::size_t d = 0; d < m.rows(); ++d)
        acc.set(d, d, k.add(acc.at(d, d), c));
    }
  }
  return acc;
}

}  // namespace lpa
