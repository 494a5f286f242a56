#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/error.hpp"
#include "gradalg/group.hpp"
#include "gradalg/morphism.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

// JSON documents for fields, groups, algebras and morphisms.
//
//   field:    {"kind": "Q"} | {"kind": "GF", "p": 3}
//   group:    {"kind": "cyclic", "n": 4} | {"kind": "symmetric", "n": 3}
//           | {"kind": "product", "factors": [group, ...]}
//           | {"kind": "cayley", "table": [[...]], "identity": 0, "labels": [...]}
//           | {"kind": "free_abelian", "rank": 1} | {"kind": "free", "rank": 2, "labels": [...]}
//   element:  index or label (finite), integer vector (free abelian; a plain
//             integer for rank 1), word string "g1 g2^-1" (free)
//   algebra:  {"field", "group", "basis": [labels], "degrees": [elements],
//              "products": [[i, j, [[k, "num/den"], ...]], ...], "unit": [[k, "c"], ...]}
//   hom:      {"domain": algebra | path, "codomain": algebra | path,
//              "matrix": [[scalar, ...], ...], "unital": bool}
//   grouphom: {"domain": group, "codomain": group, "images": [elements]}
//             (one image per element of a finite domain, otherwise per
//             generator), or with "generators" listing the domain elements
//             whose images are given.
namespace gradalg::io {

using json = nlohmann::json;

/// Malformed document. The message starts with the location ("line 3,
/// column 7" for syntax errors, a JSON path like "products[2][1]" otherwise).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

json parse_json(const std::string& text);
json read_json_file(const std::filesystem::path& path);

Field field_from_json(const json& j);
json field_to_json(Field f);

Group group_from_json(const json& j);
/// Cyclic and symmetric tables with their standard labels are written by
/// kind; other finite groups as a Cayley table with labels.
json group_to_json(const Group& g);

GroupElement element_from_json(const Group& g, const json& j);
json element_to_json(const Group& g, const GroupElement& e);

/// Shape errors throw ParseError. With `validate`, grading violations
/// throw InputError naming the offending basis triple.
GradedAlgebra algebra_from_json(const json& j, bool validate = true);
json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra parse_algebra(const std::string& text, bool validate = true);
std::string render_algebra(const GradedAlgebra& a);

/// Paths in "domain" / "codomain" are resolved against `base`.
GradedMorphism hom_from_json(const json& j, const std::filesystem::path& base = {});
json hom_to_json(const GradedMorphism& f);

GroupHom group_hom_from_json(const json& j);
json group_hom_to_json(const GroupHom& h);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const json& j);

}  // namespace gradalg::io
