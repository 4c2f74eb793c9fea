#pragma once

#include <string>
#include <vector>

namespace qsym {

struct ReportItem {
  std::string identity;
  std::string instance;
  bool pass = false;
  std::string witness;  // exact nonzero difference on failure
};

struct Report {
  std::string suite;
  std::vector<ReportItem> items;

  void add(const std::string& identity, const std::string& instance, bool pass,
           const std::string& witness = "") {
    items.push_back({identity, instance, pass, witness});
  }
  void append(const Report& other) {
    for (const auto& it : other.items) {
      ReportItem copy = it;
      copy.identity = other.suite + ": " + copy.identity;
      items.push_back(std::move(copy));
    }
  }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t k = 0;
    for (const auto& it : items)
      if (!it.pass) ++k;
    return k;
  }

  std::string text() const;
  std::string json() const;
};

}  // namespace qsym
