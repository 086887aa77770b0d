#include "mellinop/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mellinop/errors.hpp"

namespace mellinop::io {
namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    std::ostringstream msg;
    msg << what << ": missing \"" << key << "\"";
    throw InputError(msg.str());
  }
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

double as_real(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw InputError("not a number: '" + s + "'");
  return v;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("expected a complex number [re, im]");
}

json to_json(const CMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(to_json(m(i, k)));
  return {{"dim", m.rows()}, {"data", data}};
}

CMatrix matrix_from_json(const json& j) {
  const int n = as_int(require(j, "dim", "matrix"), "matrix dim");
  const json& data = require(j, "data", "matrix");
  if (n < 1) throw InputError("matrix: dim must be positive");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(n) * n)
    throw InputError("matrix: data must hold dim*dim entries");
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(data[static_cast<std::size_t>(i) * n + k]);
  if (!m.allFinite()) throw InputError("matrix: non-finite entry");
  return m;
}

std::vector<CMatrix> matrices_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of matrices");
  std::vector<CMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

json to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"elements", g.labels()}, {"table", g.table()}};
}

GroupPtr group_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::filesystem::path p = s;
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    if (std::filesystem::is_regular_file(p)) return group_from_json(load_json(p), p.parent_path());
    return builtin_group(s);
  }
  const int order = as_int(require(j, "order", "group"), "group order");
  const json& table = require(j, "table", "group");
  std::vector<std::string> labels;
  if (j.contains("elements")) {
    for (const auto& e : j.at("elements")) {
      if (!e.is_string()) throw InputError("group: element labels must be strings");
      labels.push_back(e.get<std::string>());
    }
  } else {
    for (int i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != order) throw InputError("group: element count differs from order");
  if (!table.is_array()) throw InputError("group: table must be a list of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : table) {
    if (!row.is_array()) throw InputError("group: table must be a list of rows");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(as_int(x, "group table entry"));
    rows.push_back(std::move(r));
  }
  return std::make_shared<const FiniteGroup>(std::move(labels), std::move(rows));
}

json to_json(const GroupFunction<Complex>& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(to_json(v).at("data"));
  return {{"group", to_json(*f.group())}, {"dim", f.dim()}, {"values", values}};
}

GroupFunction<Complex> group_function_from_json(const json& j, const GroupPtr& group) {
  const int d = as_int(require(j, "dim", "group function"), "group function dim");
  const json& values = require(j, "values", "group function");
  if (d < 1) throw InputError("group function: dim must be positive");
  if (!values.is_array() || static_cast<int>(values.size()) != group->order())
    throw InputError("group function: need one value per group element");
  std::vector<CMatrix> vals;
  for (const auto& v : values) {
    // scalar functions may give a bare [re, im] or number per element
    if (d == 1 && (v.is_number() || (v.is_array() && v.size() == 2 && v[0].is_number()))) {
      vals.push_back(CMatrix::Constant(1, 1, complex_from_json(v)));
      continue;
    }
    vals.push_back(matrix_from_json({{"dim", d}, {"data", v}}));
  }
  return GroupFunction<Complex>(group, std::move(vals));
}

GroupFunction<Complex> group_function_from_json(const json& j, const std::filesystem::path& base_dir) {
  return group_function_from_json(j, group_from_json(require(j, "group", "group function"), base_dir));
}

LocalizationFamily<Complex> family_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& comps = require(j, "components", "family");
  if (!comps.is_array()) throw InputError("family: components must be a list");
  LocalizationFamily<Complex> fam;
  for (const auto& c : comps) {
    const json& label = require(c, "label", "family component");
    if (!label.is_string()) throw InputError("family component: label must be a string");
    fam.add(label.get<std::string>(), group_function_from_json(require(c, "function", "family component"), base_dir));
  }
  return fam;
}

SubgroupRep subgroup_rep_from_json(const json& j, GroupPtr group, std::vector<int> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  const int d = as_int(require(j, "dim", "fiber rep"), "fiber rep dim");
  const json& mats = require(j, "matrices", "fiber rep");
  if (!mats.is_array() || mats.size() != subgroup.size())
    throw InputError("fiber rep: need one matrix per subgroup element");
  std::vector<CMatrix> rep;
  for (const auto& m : mats) rep.push_back(matrix_from_json({{"dim", d}, {"data", m}}));
  SubgroupRep sr{std::move(group), std::move(subgroup), std::move(rep)};
  sr.validate();
  return sr;
}

json to_json(const CharacterTable& t, const FiniteGroup& g) {
  json classes = json::array();
  for (const auto& c : t.classes) {
    json labels = json::array();
    for (int x : c) labels.push_back(g.label(x));
    classes.push_back({{"elements", c}, {"labels", labels}, {"size", c.size()}});
  }
  json chars = json::array();
  for (std::size_t s = 0; s < t.characters.size(); ++s) {
    json vals = json::array();
    for (const auto& v : t.characters[s]) vals.push_back(to_json(v));
    chars.push_back({{"degree", t.degrees[s]}, {"values", vals}});
  }
  return {{"order", g.order()}, {"classes", classes}, {"characters", chars}};
}

TimeDependentGenerator generator_from_json(const json& j) {
  const json& preset = require(j, "preset", "generator");
  if (!preset.is_string()) throw InputError("generator: preset must be a string");
  const std::string name = preset.get<std::string>();
  if (name == "constant") return TimeDependentGenerator::constant(matrix_from_json(require(j, "matrix", "generator")));
  if (name == "rotating-field") {
    const double a = j.contains("amplitude") ? as_real(j.at("amplitude"), "amplitude") : 1.0;
    const double w = j.contains("frequency") ? as_real(j.at("frequency"), "frequency") : 1.0;
    return TimeDependentGenerator::rotating_field(a, w);
  }
  if (name == "polynomial")
    return TimeDependentGenerator::polynomial(matrices_from_json(require(j, "coefficients", "generator")));
  throw InputError("generator: unknown preset '" + name + "'");
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    const double v = parse_real(item);
    if (v != std::floor(v)) throw InputError("not an integer: '" + item + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw InputError("empty index list");
  return out;
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw InputError("empty list");
  return out;
}

Complex parse_complex(const std::string& s) {
  const auto parts = parse_real_list(s);
  if (parts.size() == 1) return {parts[0], 0.0};
  if (parts.size() == 2) return {parts[0], parts[1]};
  throw InputError("expected re or re,im: '" + s + "'");
}

}  // namespace mellinop::io
