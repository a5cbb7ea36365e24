#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigyro/clifford.hpp"
#include "bigyro/finite_engine.hpp"
#include "bigyro/finite_group.hpp"
#include "bigyro/matcore.hpp"
#include "bigyro/pseudo_orth.hpp"

namespace bigyro {

using Json = nlohmann::ordered_json;

/// Parses a file into JSON. Throws InputError if it cannot be read or parsed.
nlohmann::json read_json_file(const std::string& path);

/// `{"rows": r, "cols": c, "data": [[...], ...]}`
Json to_json(const Mat& a);
Mat matrix_from_json(const nlohmann::json& j);

/// `{"O_m": M, "P": M, "O_n": M}`
Json to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

/// `{"m": m, "n": n, "coeffs": {"<bitmask>": value}}`, zero blades omitted.
Json to_json(const Multivector& a);
Multivector multivector_from_json(const nlohmann::json& j);

/// A group table plus an optional candidate decomposition.
struct GroupDocument {
  FiniteGroup group;
  std::optional<Subset> hl;
  std::optional<Subset> b;
  std::optional<Subset> hr;
};

/// `{"order": N, "table": [[int]], "names": [str], "H_L": [...], "B": [...], "H_R": [...]}`;
/// names and the subsets are optional. Throws InputError on malformed input,
/// including tables that are not groups.
GroupDocument load_group_document(const nlohmann::json& j);
FiniteGroup load_group(const nlohmann::json& j);

Json to_json(const FiniteGroup& g);
Json to_json(const Decomposition& d);

/// `[{"H_L", "B", "H_R", "bigyrocommutative", "degenerate"}, ...]`
Json catalog_to_json(const std::vector<SearchHit>& hits);

}  // namespace bigyro
