#pragma once

#include <optional>
#include <string>

#include "crystden/affine.hpp"
#include "crystden/nilpotent.hpp"

namespace crystden {

/// Group definition document: {"dim": n, "generators": [{"linear":
/// row-major integer list, "translation": list of "p/q" strings}, ...]}.
/// Exactness is enforced: any float anywhere is rejected (ParseError).
CrystGroup parse_group_json(const std::string& text);
CrystGroup load_group_file(const std::string& path);

/// Algebra definition document: {"dim": n, "step": k, "basis": names,
/// "brackets": [[i, j, l, "p/q"], ...] (1-based indices), "automorphism":
/// optional row-major list of "p/q" strings}.
struct AlgebraFile {
  NilAlgebra algebra;
  std::optional<NilAutomorphism> automorphism;
};

AlgebraFile parse_algebra_json(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

}  // namespace crystden
