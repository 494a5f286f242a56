#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/morphism.hpp"

#include <string>
#include <utility>
#include <vector>

// Named algebras used by the witness scenarios, the bundled documents and
// the tests. Every builder works over any field.
namespace gradalg::catalog {

using Terms = std::vector<std::pair<std::string, long>>;

/// Linear map given by images of basis labels; unlisted labels go to zero.
/// Throws NotAHomError when the result is not multiplicative.
GradedMorphism map_by_labels(const AlgebraPtr& a, const AlgebraPtr& b,
                             const std::vector<std::pair<std::string, Terms>>& images);

/// M_2(F), Z-graded: e12 in degree 1, e21 in degree -1.
AlgebraPtr m2_gamma1(Field f);
/// M_2(F), S_3-graded: e12 in (132), e21 in (123).
AlgebraPtr m2_gamma2_s3(Field f);

/// <1, a, b> over Z/2 with a, b odd and all products of a, b zero.
AlgebraPtr three_dim_z2(Field f);
/// 1 -> 1, a -> b, b -> 0 on three_dim_z2.
GradedMorphism shift_endomorphism(const AlgebraPtr& a);

/// <1, a, b, c, d, cd> graded by Z/3 = <xi>: 1, cd in e; a, c in xi;
/// b, d in xi^2. Products of a, b, c, d vanish except cd = dc.
AlgebraPtr c3_six_dim(Field f);
/// <1, v>, v^2 = 0, trivial grading.
AlgebraPtr dual_numbers_trivial(Field f);
/// Monomial algebra on x, y, z with basis 1, x, y, z, xy, yz, zy, yx, xyz,
/// zyx, graded by the free group on X, Z (x in X, y in 1, z in Z).
AlgebraPtr free_group_monomial(Field f);

/// <1, a, b, c, d> with <a, b, c, d>^2 = 0 graded by the free group on
/// x, y: a, c in x; b, d in y.
AlgebraPtr free_group_five_dim(Field f);
/// The subalgebra <1, a, b> of free_group_five_dim.
AlgebraPtr free_group_sub_ab(Field f);
/// The subalgebra <1, a> of free_group_five_dim.
AlgebraPtr free_group_sub_a(Field f);

/// <1, a1, a2, a3> with zero products of the a_i, a_i in degree i of Z/4.
AlgebraPtr z4_four_dim(Field f);

/// <1, a> with a^2 = 0 and a odd (Z/2). `name` labels the nilpotent.
AlgebraPtr dual_numbers_z2(Field f, const std::string& name = "a");
/// <1, a1, a2> over Z/3 with a_j in degree j and all products of a1, a2 zero.
AlgebraPtr z3_three_dim(Field f);
/// <1, b1, b2, b1b2> over Z/2 x Z/2 with b1^2 = b2^2 = b2 b1 = 0.
AlgebraPtr klein_four_dim(Field f);

/// Standard group algebras: "z2", "z3", "z4", "z2xz2", "s3".
AlgebraPtr group_algebra_named(const std::string& group, Field f);
/// F with the trivial grading.
AlgebraPtr ground_field(Field f);

/// All document names known to algebra().
std::vector<std::string> names();
/// Throws InputError for an unknown name.
AlgebraPtr algebra(const std::string& name, Field f);

}  // namespace gradalg::catalog
