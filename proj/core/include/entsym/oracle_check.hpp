#pragma once
// Cross-checks of the formula paths against the dense brute-force oracles
// and the finite-m exponent oracle, at tiny scale.

#include "entsym/budget.hpp"

#include <string>
#include <vector>

namespace entsym {

enum class CheckStatus { pass, fail, skipped };

struct CheckLine {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

const char* to_string(CheckStatus status) noexcept;

/// scope is one of spectra, clone1, clone2, exponent, all.
std::vector<CheckLine> oracle_check(const std::string& scope, const Budget& budget = {});

}  // namespace entsym
