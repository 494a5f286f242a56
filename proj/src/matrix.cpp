#include "gradalg/matrix.hpp"

#include "gradalg/error.hpp"

namespace gradalg {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& s) {
  if (s.field() != field_)
    throw InputError("mixed field tags: " + s.field().name() + " entry in " +
                     field_.name() + " matrix");
  data_.at(r * cols_ + c) = s;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.field_ != b.field_)
    throw InputError("matrix product shape or field mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out.data_[i * b.cols_ + j] += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
    throw InputError("matrix sum shape or field mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
    throw InputError("matrix difference shape or field mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += gradalg::to_string(row(r));
  }
  return out + "]";
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Scalar tmp = a(r, k);
        a.set(r, k, a(pivot_row, k));
        a.set(pivot_row, k, tmp);
      }
    Scalar inv = a(pivot_row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a.set(pivot_row, k, a(pivot_row, k) * inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(pivot_row, k).is_zero()) a.set(i, k, a(i, k) - factor * a(pivot_row, k));
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(Field f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), basis_(f, 0, ambient_dim) {}

Subspace Subspace::span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(f, ambient_dim);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw InputError("subspace dimension mismatch");
  RowEchelon e = rref(Matrix::from_rows(f, vectors));
  Matrix basis(f, e.rank, ambient_dim);
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis.set(r, c, e.reduced(r, c));
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(e.pivot_columns);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient_dim) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient_dim; ++i) vs.push_back(unit_vector(f, ambient_dim, i));
  return span(f, ambient_dim, vs);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("subspace dimension mismatch");
  Vector w = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!basis_(r, k).is_zero()) w[k] -= c * basis_(r, k);
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, m.cols(), free);
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

namespace {
void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim())
    throw InputError("subspaces live in different ambient spaces");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  auto vs = a.basis();
  for (auto& v : b.basis()) vs.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  // x in a ∩ b  <=>  x = sum s_i a_i = sum t_j b_j; solve [A^T | -B^T] (s,t) = 0.
  const Field f = a.field();
  const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  Matrix m(f, n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < n; ++k) m.set(k, i, a.basis_matrix()(i, k));
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t k = 0; k < n; ++k) m.set(k, da + j, -b.basis_matrix()(j, k));
  std::vector<Vector> vs;
  for (const auto& sol : kernel(m).basis()) {
    Vector x = zero_vector(f, n);
    for (std::size_t i = 0; i < da; ++i)
      if (!sol[i].is_zero()) x = x + sol[i] * a.basis_matrix().row(i);
    vs.push_back(std::move(x));
  }
  return Subspace::span(f, n, vs);
}

bool subspace_contains(const Subspace& s, const Vector& v) { return s.contains(v); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  RowEchelon e = rref(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivot_columns[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, Scalar::one(m.field()));
  }
  RowEchelon e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.reduced(r, n + c));
  return inv;
}

}  // namespace gradalg
