#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bigyro {

/// Outcome of one law evaluated over many samples.
///
/// For numeric suites `max_residual` is the largest absolute entry difference
/// seen; for exhaustive finite suites it is the number of violating tuples.
struct LawResult {
  std::string law;
  std::size_t trials = 0;
  double max_residual = 0.0;
  bool pass = true;
  std::string witness;  // first failing sample, empty when passing
  std::size_t violations = 0;
};

class Report {
 public:
  /// Records `residual` for `law` against `tol`, creating the entry on first use.
  /// Entries keep first-seen order.
  void record(const std::string& law, double residual, double tol, const std::string& witness = {});

  /// Boolean check: counts as residual 1 when `ok` is false.
  void expect(const std::string& law, bool ok, const std::string& witness = {});

  void add(LawResult r) { laws_.push_back(std::move(r)); }
  void append(const Report& other);

  const std::vector<LawResult>& laws() const noexcept { return laws_; }
  const LawResult* find(const std::string& law) const;
  bool all_pass() const;

  /// `[{"law", "trials", "max_residual", "pass"}, ...]`; failing laws also
  /// carry `"witness"`.
  nlohmann::ordered_json to_json() const;

  /// Fixed-width plain-text table.
  std::string to_text() const;

 private:
  LawResult& entry(const std::string& law);
  std::vector<LawResult> laws_;
};

}  // namespace bigyro
