#pragma once

#include "gradalg/algebra.hpp"

#include <vector>

namespace gradalg {

/// FG with basis u_g (labelled "u_<element label>"), u_g u_h = u_gh,
/// deg u_g = g, unit u_e.
GradedAlgebra group_algebra(Field field, const FiniteGroup& g);
GradedAlgebra group_algebra(Field field, const Group& g);

/// Full matrix algebra M_n with basis e_ij (labels "e<i><j>", 1-based) and
/// the elementary grading deg e_ij = g_i * g_j^-1.
GradedAlgebra matrix_algebra_elementary(Field field, const Group& group,
                                        const std::vector<GroupElement>& degrees);

/// Componentwise product, cross products zero, no unit. Labels get a
/// ".k" suffix (k = 1-based summand) when there is more than one summand.
GradedAlgebra direct_sum(const std::vector<GradedAlgebra>& summands);

struct Quotient {
  GradedAlgebra algebra;
  /// dim(quotient) x dim(A).
  Matrix projection;
  Subspace ideal;
};

/// A / I where I is the two-sided ideal generated by `generators`. The
/// quotient basis is the images of the standard basis vectors outside the
/// ideal's pivot columns. The grading descends when I is spanned by
/// homogeneous elements; otherwise the quotient is trivially graded.
Quotient quotient(const GradedAlgebra& a, const std::vector<Vector>& generators);

/// Same algebra graded by the trivial group.
GradedAlgebra trivial_grading(const GradedAlgebra& a);
bool has_trivial_grading(const GradedAlgebra& a);
/// Dimension 0, trivial group.
GradedAlgebra zero_algebra(Field field);

/// A x B with the trivial grading; throws InputError unless both inputs are
/// trivially graded. Labels are prefixed "1:" and "2:".
GradedAlgebra direct_product_trivial(const GradedAlgebra& a, const GradedAlgebra& b);

/// Ideal closure used by quotient: smallest subspace containing the
/// generators and stable under left and right multiplication by the basis.
Subspace generated_ideal(const GradedAlgebra& a, const std::vector<Vector>& generators);

}  // namespace gradalg
