#include "bigyro/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bigyro/errors.hpp"

namespace bigyro {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

std::size_t count_field(const nlohmann::json& j, const char* key, const char* what) {
  const auto& v = field(j, key, what);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InputError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Subset subset_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of element indices");
  Subset out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw InputError(std::string(what) + " must contain non-negative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json to_json(const Mat& a) {
  Json data = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    data.push_back(std::move(row));
  }
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["data"] = std::move(data);
  return j;
}

Mat matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = count_field(j, "rows", "matrix");
  const std::size_t cols = count_field(j, "cols", "matrix");
  const auto& data = field(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows) throw InputError("matrix: \"data\" must have one array per row");
  std::vector<double> flat;
  flat.reserve(rows * cols);
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != cols) throw InputError("matrix: every row must have \"cols\" entries");
    for (const auto& x : row) {
      if (!x.is_number()) throw InputError("matrix: entries must be numbers");
      flat.push_back(x.get<double>());
    }
  }
  return Mat(rows, cols, std::move(flat));
}

Json to_json(const Factorization& f) {
  Json j;
  j["O_m"] = to_json(f.om);
  j["P"] = to_json(f.p);
  j["O_n"] = to_json(f.on);
  return j;
}

Factorization factorization_from_json(const nlohmann::json& j) {
  return {matrix_from_json(field(j, "O_m", "factorization")), matrix_from_json(field(j, "P", "factorization")),
          matrix_from_json(field(j, "O_n", "factorization"))};
}

Json to_json(const Multivector& a) {
  Json coeffs = Json::object();
  for (std::size_t mask = 0; mask < a.coeffs().size(); ++mask)
    if (a.coeffs()[mask] != 0.0) coeffs[std::to_string(mask)] = a.coeffs()[mask];
  Json j;
  j["m"] = a.algebra().m();
  j["n"] = a.algebra().n();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Multivector multivector_from_json(const nlohmann::json& j) {
  const CliffordAlgebra alg(count_field(j, "m", "multivector"), count_field(j, "n", "multivector"));
  const auto& coeffs = field(j, "coeffs", "multivector");
  if (!coeffs.is_object()) throw InputError("multivector: \"coeffs\" must be an object");
  std::vector<double> c(alg.blades(), 0.0);
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    std::size_t mask = 0;
    std::size_t used = 0;
    try {
      mask = std::stoul(it.key(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != it.key().size() || mask >= alg.blades()) {
      throw InputError("multivector: bad blade key \"" + it.key() + "\"");
    }
    if (!it.value().is_number()) throw InputError("multivector: coefficients must be numbers");
    c[mask] = it.value().get<double>();
  }
  return Multivector(alg, std::move(c));
}

GroupDocument load_group_document(const nlohmann::json& j) {
  const std::size_t order = count_field(j, "order", "group");
  const auto& table = field(j, "table", "group");
  if (!table.is_array() || table.size() != order) throw InputError("group: \"table\" must have \"order\" rows");
  std::vector<std::vector<std::size_t>> t;
  for (const auto& row : table) t.push_back(subset_from_json(row, "group table row"));
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    if (!it->is_array()) throw InputError("group: \"names\" must be an array of strings");
    for (const auto& s : *it) {
      if (!s.is_string()) throw InputError("group: \"names\" must be an array of strings");
      names.push_back(s.get<std::string>());
    }
  }
  GroupDocument doc{FiniteGroup(std::move(t), std::move(names)), std::nullopt, std::nullopt, std::nullopt};
  if (auto it = j.find("H_L"); it != j.end()) doc.hl = subset_from_json(*it, "H_L");
  if (auto it = j.find("B"); it != j.end()) doc.b = subset_from_json(*it, "B");
  if (auto it = j.find("H_R"); it != j.end()) doc.hr = subset_from_json(*it, "H_R");
  return doc;
}

FiniteGroup load_group(const nlohmann::json& j) { return load_group_document(j).group; }

Json to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = g.table();
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["H_L"] = d.hl();
  j["B"] = d.b();
  j["H_R"] = d.hr();
  return j;
}

Json catalog_to_json(const std::vector<SearchHit>& hits) {
  Json out = Json::array();
  for (const SearchHit& h : hits) {
    Json j = to_json(h.decomposition);
    j["bigyrocommutative"] = h.bigyrocommutative;
    j["degenerate"] = h.degenerate;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace bigyro
