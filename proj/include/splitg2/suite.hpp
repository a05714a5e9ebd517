#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitg2/field.hpp"

namespace splitg2 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  FieldSpec field;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
  std::string text() const;
};

/// Leibniz on basis pairs, antisymmetry, Jacobi, closure and the golden-table
/// comparison. Over GF(p) the golden table is reduced mod p before comparing.
VerifyReport run_verification(const FieldSpec& field, std::string_view golden);

}  // namespace splitg2
