#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flagcurves {

// Uniform pass/fail reporting for verification suites.
struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_ok = true;

  void add(std::string name, bool ok, std::string detail = "") {
    all_ok = all_ok && ok;
    items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
  }
  void merge(const CheckReport& o) {
    for (const auto& item : o.items) {
      all_ok = all_ok && item.ok;
      items.push_back(item);
    }
  }
};

}  // namespace flagcurves
