#include "bigyro/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bigyro {

LawResult& Report::entry(const std::string& law) {
  auto it = std::find_if(laws_.begin(), laws_.end(), [&](const LawResult& r) { return r.law == law; });
  if (it != laws_.end()) return *it;
  laws_.push_back(LawResult{law, 0, 0.0, true, {}, 0});
  return laws_.back();
}

void Report::record(const std::string& law, double residual, double tol, const std::string& witness) {
  LawResult& r = entry(law);
  ++r.trials;
  // NaN residuals must fail.
  const bool ok = residual <= tol;
  if (!(residual <= r.max_residual)) r.max_residual = residual;
  if (!ok) {
    ++r.violations;
    if (r.pass) {
      r.pass = false;
      r.witness = witness;
    }
  }
}

void Report::expect(const std::string& law, bool ok, const std::string& witness) {
  LawResult& r = entry(law);
  ++r.trials;
  if (!ok) {
    ++r.violations;
    r.max_residual += 1.0;
    if (r.pass) {
      r.pass = false;
      r.witness = witness;
    }
  }
}

void Report::append(const Report& other) {
  laws_.insert(laws_.end(), other.laws_.begin(), other.laws_.end());
}

const LawResult* Report::find(const std::string& law) const {
  auto it = std::find_if(laws_.begin(), laws_.end(), [&](const LawResult& r) { return r.law == law; });
  return it == laws_.end() ? nullptr : &*it;
}

bool Report::all_pass() const {
  return std::all_of(laws_.begin(), laws_.end(), [](const LawResult& r) { return r.pass; });
}

nlohmann::ordered_json Report::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : laws_) {
    nlohmann::ordered_json j;
    j["law"] = r.law;
    j["trials"] = r.trials;
    j["max_residual"] = r.max_residual;
    j["pass"] = r.pass;
    if (!r.pass && !r.witness.empty()) j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

std::string Report::to_text() const {
  std::size_t width = 4;
  for (const auto& r : laws_) width = std::max(width, r.law.size());
  std::ostringstream os;
  char line[64];
  os << "law" << std::string(width - 3 + 2, ' ') << "trials  max_residual  result\n";
  for (const auto& r : laws_) {
    std::snprintf(line, sizeof line, "%6zu  %12.3e  %s", r.trials, r.max_residual, r.pass ? "pass" : "FAIL");
    os << r.law << std::string(width - r.law.size() + 2, ' ') << line << '\n';
  }
  return os.str();
}

}  // namespace bigyro
