#pragma once

// JSON interchange: scalars, algebras with forms, reports.

#include <string>

#include <nlohmann/json.hpp>

#include "manin/lie.hpp"

namespace manin {

using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s);
/// Accepts {"re": "p/q", "im": "r/s"} or a plain string such as "1/2-i".
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

/// {"name", "basis":[{"label","parity"[,"degree"]}], "brackets":[...], "forms":[...]}
/// plus "grading" and "escapes" for truncated algebras.
json algebra_to_json(const LieSuperAlgebra& g, const std::vector<BilinearForm>& forms = {});

struct ImportedAlgebra {
  AlgebraPtr algebra;
  std::vector<BilinearForm> forms;
};
ImportedAlgebra algebra_from_json(const json& j);

json check_to_json(const CheckReport& r);

}  // namespace manin
