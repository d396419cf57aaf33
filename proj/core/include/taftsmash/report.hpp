#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace taftsmash {

struct Check {
  std::string name;
  bool passed = false;
  std::string details;
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool passed, const std::string& details = "") {
    checks.push_back({name, passed, details});
  }

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  std::string str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
      if (!c.details.empty()) os << " -- " << c.details;
      os << "\n";
    }
    return os.str();
  }
};

}  // namespace taftsmash
