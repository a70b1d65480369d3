#pragma once

// Validation reports shared by all validators. A report is a list of
// violations; each violation carries a stable machine-readable code
// (e.g. "axiom.assoc", "malformed.comp_missing") and a deterministic
// human-readable message naming the witness.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polycat {

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  bool has_code(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
  }

  bool has_code_prefix(const std::string& prefix) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
      return v.code.compare(0, prefix.size(), prefix) == 0;
    });
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s = violations.front().code + ": " + violations.front().message;
    if (violations.size() > 1)
      s += " (+" + std::to_string(violations.size() - 1) + " more)";
    return s;
  }
};

// Thrown on contract breaches: malformed inputs, dimension caps, boundary
// mismatches. `code` mirrors the violation-code convention.
class PolycatError : public std::runtime_error {
 public:
  PolycatError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace polycat
