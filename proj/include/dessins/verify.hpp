#pragma once

#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

/// Runs every invariant that applies to d; checks that do not apply are
/// reported as skipped.
std::vector<CheckResult> verify_dessin(const Dessin& d);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace dessins
