#pragma once

// Golden identities checked by the `verify` command.

#include <string>
#include <vector>

namespace pvs {

struct GoldenRow {
  std::string name;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::string note;  // e.g. count of compared entries
};

std::vector<GoldenRow> run_verify();

}  // namespace pvs
