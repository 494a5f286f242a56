#pragma once

// Independent reference computations and samplers shared by the test suites.
// Nothing here calls the library's elimination routines.

#include "gradalg/algebra.hpp"
#include "gradalg/catalog.hpp"
#include "gradalg/hom_search.hpp"
#include "gradalg/matrix.hpp"
#include "gradalg/smith.hpp"

#include <gmpxx.h>

#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace gradalg;

// Fraction-free determinant; exact division keeps every entry integral.
inline mpz_class bareiss_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Rank over GF(p) as log_p of the size of the column span, by enumerating
// every coefficient vector. Only for tiny matrices.
inline std::size_t brute_rank(const Matrix& m) {
  const std::size_t p = m.field().characteristic();
  const std::size_t n = m.cols();
  std::set<std::vector<std::uint64_t>> image;
  std::vector<std::uint64_t> x(n, 0);
  for (;;) {
    std::vector<std::uint64_t> y(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) y[r] = (y[r] + m(r, c).residue() * x[c]) % p;
    image.insert(y);
    std::size_t k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  std::size_t r = 0;
  for (std::size_t s = image.size(); s > 1; s /= p) ++r;
  return r;
}

// Number of x in GF(p)^n with m x = 0.
inline std::size_t brute_kernel_size(const Matrix& m) {
  const std::size_t p = m.field().characteristic();
  const std::size_t n = m.cols();
  std::size_t count = 0;
  std::vector<std::uint64_t> x(n, 0);
  for (;;) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint64_t y = 0;
      for (std::size_t c = 0; c < n; ++c) y = (y + m(r, c).residue() * x[c]) % p;
      zero = y == 0;
    }
    count += zero;
    std::size_t k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  return count;
}

inline Scalar random_scalar(Field f, std::mt19937& rng, long range = 3) {
  if (f.is_finite()) return Scalar::from_int(f, static_cast<long>(rng() % f.characteristic()));
  std::uniform_int_distribution<long> num(-range, range), den(1, 2);
  return Scalar::from_rational(f, mpq_class(num(rng), den(rng)));
}

inline Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(f, rng));
  return m;
}

inline IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, long range = 9) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

// Random element of the component of degree g (zero if the component is empty).
inline Vector random_homogeneous(const GradedAlgebra& a, const GroupElement& g, std::mt19937& rng) {
  Vector v = a.zero();
  for (std::size_t i : a.component_indices(g)) v[i] = random_scalar(a.field(), rng);
  return v;
}

// Small algebras from the catalog used as sampling pools.
inline std::vector<AlgebraPtr> small_pool(Field f) {
  return {catalog::ground_field(f),
          catalog::dual_numbers_z2(f),
          catalog::dual_numbers_trivial(f),
          catalog::group_algebra_named("z2", f),
          catalog::group_algebra_named("z3", f),
          catalog::three_dim_z2(f),
          catalog::z3_three_dim(f),
          catalog::z4_four_dim(f),
          catalog::klein_four_dim(f)};
}

struct HomPool {
  std::vector<AlgebraPtr> algebras;
  // homs[i][j]: graded homs algebras[i] -> algebras[j].
  std::vector<std::vector<std::vector<GradedMorphism>>> homs;
};

inline HomPool hom_pool(Field f, std::size_t limit = 24) {
  HomPool p;
  p.algebras = small_pool(f);
  const std::size_t n = p.algebras.size();
  p.homs.assign(n, std::vector<std::vector<GradedMorphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      HomSearchOptions opt;
      opt.limit = limit;
      opt.node_budget = 50000;
      p.homs[i][j] = enumerate_graded_homs(p.algebras[i], p.algebras[j], opt).homs;
    }
  return p;
}

}  // namespace oracle
