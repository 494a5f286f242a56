#include "gradalg/smith.hpp"

#include "gradalg/error.hpp"

#include <optional>
#include <utility>

namespace gradalg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged integer matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("integer matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m), left_(IntMatrix::identity(m.rows())), right_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_at(t)) break;
      diag.push_back(a_(t, t));
    }
    return SmithForm{std::move(diag), std::move(left_), std::move(right_)};
  }

 private:
  // Smallest |entry| in the trailing block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        if (a_(r, c) == 0) continue;
        if (!best || abs(a_(r, c)) < abs(a_(best->first, best->second))) best = {r, c};
      }
    return best;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < left_.cols(); ++c) std::swap(left_(i, c), left_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < right_.rows(); ++r) std::swap(right_(r, i), right_(r, j));
  }

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) += q * a_(j, c);
    for (std::size_t c = 0; c < left_.cols(); ++c) left_(i, c) += q * left_(j, c);
  }

  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) += q * a_(r, j);
    for (std::size_t r = 0; r < right_.rows(); ++r) right_(r, i) += q * right_(r, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < left_.cols(); ++c) left_(i, c) = -left_(i, c);
  }

  bool reduce_at(std::size_t t) {
    for (;;) {
      auto pivot = find_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(r, t, -q);
        if (a_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(c, t, -q);
        if (a_(t, c) != 0) clean = false;
      }
      // A nonzero remainder is smaller than the pivot, so the next pass
      // picks a strictly smaller pivot; this terminates.
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t r = t + 1; r < a_.rows() && divides_all; ++r)
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row(t, r, 1);
            divides_all = false;
            break;
          }
      if (!divides_all) continue;

      if (a_(t, t) < 0) negate_row(t);
      return true;
    }
  }

  IntMatrix a_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return Reducer(m).run(); }

}  // namespace gradalg
