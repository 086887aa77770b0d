#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mellinop/characters.hpp"
#include "mellinop/group.hpp"
#include "mellinop/group_algebra.hpp"
#include "mellinop/induction.hpp"
#include "mellinop/magnus.hpp"
#include "mellinop/types.hpp"

namespace mellinop::io {

using nlohmann::json;

/// Parse a file; InputError on missing file or malformed JSON.
json load_json(const std::filesystem::path& path);

/// [re, im]; a bare number is accepted on input.
json to_json(Complex z);
Complex complex_from_json(const json& j);

/// {"dim": n, "data": [[re, im], ...]} row-major, n*n entries.
json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);
std::vector<CMatrix> matrices_from_json(const json& j);

/// {"order": n, "elements": [labels], "table": [[int]]}.
json to_json(const FiniteGroup& g);
/// Inline group object, a built-in name ("Z6", "D4", "S3", ...), or a path
/// to a group JSON file (relative paths resolve against base_dir).
GroupPtr group_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// {"group": ..., "dim": d, "values": [[[re, im], ...], ...]} indexed by element.
json to_json(const GroupFunction<Complex>& f);
GroupFunction<Complex> group_function_from_json(const json& j, const std::filesystem::path& base_dir = {});
/// Functions given without their own group use the supplied one.
GroupFunction<Complex> group_function_from_json(const json& j, const GroupPtr& group);

/// {"components": [{"label": s, "function": <GroupFunction JSON>}, ...]}.
LocalizationFamily<Complex> family_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// Fiber rep {"dim": d, "matrices": [data, ...]}: one row-major data array
/// per subgroup element, in the group's element order.
SubgroupRep subgroup_rep_from_json(const json& j, GroupPtr group, std::vector<int> subgroup);

json to_json(const CharacterTable& t, const FiniteGroup& g);

/// {"preset": "constant", "matrix": M} | {"preset": "rotating-field",
/// "amplitude": a, "frequency": w} | {"preset": "polynomial", "coefficients": [M, ...]}.
TimeDependentGenerator generator_from_json(const json& j);

/// Comma-separated integers or reals.
std::vector<int> parse_index_list(const std::string& s);
std::vector<double> parse_real_list(const std::string& s);
/// "re" or "re,im".
Complex parse_complex(const std::string& s);

}  // namespace mellinop::io
