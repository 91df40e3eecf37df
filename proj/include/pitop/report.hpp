#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pitop {

/// Outcome of a verifier: named checks with a capped list of failing witnesses.
struct Check {
  std::string name;
  bool pass = true;
  long tested = 0;
  long failures = 0;
  std::vector<std::string> witnesses;
  std::string note;
};

class Report {
 public:
  static constexpr size_t kMaxWitnesses = 20;

  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  /// Registers a check (idempotent by name) and returns it.
  Check& check(const std::string& name);
  /// Records one evaluation of `name`; failing ones store the witness text.
  void record(const std::string& name, bool ok, const std::string& witness = {});
  void note(const std::string& name, const std::string& text);
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  bool passed(const std::string& name) const;
  const Check* find(const std::string& name) const;
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& title() const { return title_; }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace pitop
