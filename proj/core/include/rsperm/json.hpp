#pragma once

// JSON views of matrices and reports. Element values are element literals
// (strings), matching the command-line grammar.

#include <nlohmann/json.hpp>

#include "rsperm/codes.hpp"
#include "rsperm/permgroup.hpp"
#include "rsperm/sweep.hpp"

namespace rsperm {

/// Array of rows, each an array of element literals.
nlohmann::json to_json(const GeneratorMatrix& M);

/// {"order", "affine_order", "equal", "abelian", "label",
///  "elements": [{"perm", "poly", "degree", "affine"}]}; perm is 1-based.
nlohmann::json to_json(const GroupReport& report);

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<AffinePermutation>& group);
nlohmann::json to_json(const SweepResult& result);

}  // namespace rsperm
