#include "splitg2/suite.hpp"

#include <optional>

#include "splitg2/io.hpp"

namespace splitg2 {

std::size_t VerifyReport::passed() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.passed ? 1 : 0;
  return n;
}

std::string VerifyReport::text() const {
  std::string out;
  for (const CheckResult& c : checks) {
    out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
  }
  out += std::to_string(passed()) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

namespace {

std::string describe(const Violation& v) {
  std::string out = "(";
  for (int idx : {v.i, v.j, v.k, v.l}) {
    if (idx < 0) continue;
    if (out.size() > 1) out += ", ";
    out += std::to_string(idx + 1);
  }
  return out + ") = " + v.value.to_string();
}

CheckResult axiom_check(const char* name, const AxiomReport& r) {
  CheckResult c{name, r.ok(), {}};
  c.detail = std::to_string(r.checked) + " instances, " + std::to_string(r.violations.size()) +
             " violations";
  if (!r.ok()) c.detail += "; first at " + describe(r.violations.front());
  return c;
}

}  // namespace

VerifyReport run_verification(const FieldSpec& field, std::string_view golden) {
  // Golden data is integral; parse over Q and reduce so every field works.
  const BracketTable expected =
      reduce_table(io::parse_golden(FieldSpec::rationals(), golden), field);

  VerifyReport report;
  report.field = field;
  const DerivationSpace space = solve_derivations(field);

  {
    std::size_t failing = 0;
    for (const Map8& d : space.basis) failing += is_derivation(d) ? 0 : 1;
    CheckResult c{"leibniz", failing == 0 && space.dim > 0, {}};
    c.detail = "dim = " + std::to_string(space.dim) + ", " + std::to_string(space.basis.size()) +
               " basis derivations x 64 basis pairs, " + std::to_string(failing) + " failing";
    report.checks.push_back(std::move(c));
  }

  std::optional<BracketTable> table;
  {
    CheckResult c{"closure", false, {}};
    try {
      table = structure_table(space);
      c.passed = true;
      c.detail = "all 196 brackets reconstructed in the span";
    } catch (const Error& e) {
      c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
  }

  if (table) {
    report.checks.push_back(axiom_check("antisymmetry", verify_antisymmetry(*table)));
    report.checks.push_back(axiom_check("jacobi", verify_jacobi(*table)));
    CheckResult c{"golden", true, "all 196 cells match"};
    if (const auto bad = first_mismatch(*table, expected)) {
      c.passed = false;
      c.detail = "mismatch at cell (" + std::to_string(bad->i + 1) + ", " +
                 std::to_string(bad->j + 1) + "): computed " + format_cell(*table, bad->i, bad->j) +
                 ", golden " + format_cell(expected, bad->i, bad->j);
    }
    report.checks.push_back(std::move(c));
  } else {
    for (const char* name : {"antisymmetry", "jacobi", "golden"}) {
      report.checks.push_back({name, false, "no structure table"});
    }
  }
  return report;
}

}  // namespace splitg2
