#include "splitg2/splitg2.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "splitg2/io.hpp"
#include "splitg2/suite.hpp"

using namespace splitg2;

struct sg2_field {
  FieldSpec field;
};
struct sg2_octonion {
  ZornMatrix z;
};
struct sg2_matrix {
  Matrix m;
};
struct sg2_space {
  DerivationSpace space;
};
struct sg2_table {
  BracketTable table;
};
struct sg2_report {
  VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

sg2_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return SG2_ERR_FIELD_MISMATCH;
    case ErrorCode::DivisionByZero: return SG2_ERR_DIVISION_BY_ZERO;
    case ErrorCode::InvalidModulus: return SG2_ERR_INVALID_MODULUS;
    case ErrorCode::ShapeMismatch: return SG2_ERR_SHAPE_MISMATCH;
    case ErrorCode::NotInteger: return SG2_ERR_NOT_INTEGER;
    case ErrorCode::NotInSpan: return SG2_ERR_NOT_IN_SPAN;
    case ErrorCode::NotClosed: return SG2_ERR_NOT_CLOSED;
    case ErrorCode::ParameterizationMismatch: return SG2_ERR_PARAMETERIZATION;
    case ErrorCode::ParseError: return SG2_ERR_PARSE;
    case ErrorCode::InvalidArgument: return SG2_ERR_INVALID_ARGUMENT;
  }
  return SG2_ERR_INTERNAL;
}

template <typename F>
sg2_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SG2_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SG2_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG2_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* sg2_last_error(void) { return g_last_error.c_str(); }

const char* sg2_status_name(sg2_status status) {
  switch (status) {
    case SG2_OK: return "OK";
    case SG2_ERR_FIELD_MISMATCH: return "FieldMismatch";
    case SG2_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case SG2_ERR_INVALID_MODULUS: return "InvalidModulus";
    case SG2_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case SG2_ERR_NOT_INTEGER: return "NotInteger";
    case SG2_ERR_NOT_IN_SPAN: return "NotInSpan";
    case SG2_ERR_NOT_CLOSED: return "NotClosed";
    case SG2_ERR_PARAMETERIZATION: return "ParameterizationMismatch";
    case SG2_ERR_PARSE: return "ParseError";
    case SG2_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SG2_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void sg2_string_free(char* s) { std::free(s); }

sg2_status sg2_field_parse(const char* spec, sg2_field** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new sg2_field{FieldSpec::parse(spec)};
  });
}

sg2_status sg2_field_describe(const sg2_field* field, char** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    *out = dup_string(field->field.to_string());
  });
}

void sg2_field_free(sg2_field* field) { delete field; }

sg2_status sg2_octonion_parse(const sg2_field* field, const char* text, sg2_octonion** out) {
  return guarded([&] {
    require(field, "field");
    require(text, "text");
    require(out, "out");
    *out = new sg2_octonion{io::parse_octonion(field->field, text)};
  });
}

sg2_status sg2_octonion_mul(const sg2_octonion* lhs, const sg2_octonion* rhs, sg2_octonion** out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = new sg2_octonion{zmul(lhs->z, rhs->z)};
  });
}

sg2_status sg2_octonion_render(const sg2_octonion* z, sg2_format format, char** out) {
  return guarded([&] {
    require(z, "octonion");
    require(out, "out");
    switch (format) {
      case SG2_FORMAT_JSON: *out = dup_string(dump(io::to_json(z->z))); break;
      case SG2_FORMAT_LATEX: *out = dup_string(io::zorn_latex(z->z)); break;
      default: *out = dup_string(io::zorn_text(z->z)); break;
    }
  });
}

void sg2_octonion_free(sg2_octonion* z) { delete z; }

sg2_status sg2_matrix_parse_json(const sg2_field* field, const char* json, sg2_matrix** out) {
  return guarded([&] {
    require(field, "field");
    require(json, "json");
    require(out, "out");
    *out = new sg2_matrix{io::matrix_from_json(field->field, io::parse_json(json))};
  });
}

sg2_status sg2_matrix_render(const sg2_matrix* m, sg2_format format, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    switch (format) {
      case SG2_FORMAT_JSON: *out = dup_string(dump(io::to_json(m->m))); break;
      case SG2_FORMAT_LATEX: *out = dup_string(io::matrix_latex(m->m)); break;
      default: *out = dup_string(io::matrix_text(m->m)); break;
    }
  });
}

void sg2_matrix_free(sg2_matrix* m) { delete m; }

sg2_status sg2_space_solve(const sg2_field* field, sg2_space** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    *out = new sg2_space{solve_derivations(field->field)};
  });
}

sg2_status sg2_space_dim(const sg2_space* space, size_t* dim) {
  return guarded([&] {
    require(space, "space");
    require(dim, "dim");
    *dim = space->space.dim;
  });
}

int sg2_space_is_pinned(const sg2_space* space) {
  return space != nullptr && space->space.pinned ? 1 : 0;
}

sg2_status sg2_space_basis_element(const sg2_space* space, size_t index, sg2_matrix** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    if (index >= space->space.basis.size()) {
      throw Error(ErrorCode::InvalidArgument, "basis index out of range: " + std::to_string(index));
    }
    *out = new sg2_matrix{space->space.basis[index].matrix()};
  });
}

sg2_status sg2_space_render(const sg2_space* space, sg2_format format, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    const DerivationSpace& s = space->space;
    if (format == SG2_FORMAT_JSON) {
      *out = dup_string(dump(io::to_json(s)));
      return;
    }
    const bool latex = format == SG2_FORMAT_LATEX;
    std::string text = latex ? "% dim = " + std::to_string(s.dim) + "\n"
                             : "dim = " + std::to_string(s.dim) + "\n";
    if (!s.pinned) {
      text += std::string(latex ? "% " : "") +
              "raw nullspace basis (the x1..x14 labeling does not apply)\n";
    }
    for (std::size_t k = 0; k < s.basis.size(); ++k) {
      const std::string label = s.pinned ? "x" + std::to_string(k + 1)
                                         : "basis " + std::to_string(k + 1);
      text += latex ? "\n% " + label + "\n" + io::matrix_latex(s.basis[k].matrix())
                    : "\n" + label + " (" + std::string(s.pinned ? kParamNames[k] : "raw") +
                          "):\n" + io::matrix_text(s.basis[k].matrix());
    }
    *out = dup_string(text);
  });
}

void sg2_space_free(sg2_space* space) { delete space; }

sg2_status sg2_recon(const sg2_matrix* m, sg2_format format, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    const DerivationParams p = recon(Map8(m->m));
    switch (format) {
      case SG2_FORMAT_JSON: *out = dup_string(dump(io::to_json(p))); break;
      case SG2_FORMAT_LATEX: *out = dup_string(io::params_latex(p)); break;
      default: *out = dup_string(io::params_text(p)); break;
    }
  });
}

sg2_status sg2_bracket(const sg2_matrix* a, const sg2_matrix* b, sg2_matrix** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new sg2_matrix{bracket(Map8(a->m), Map8(b->m)).matrix()};
  });
}

sg2_status sg2_table_compute(const sg2_space* space, sg2_table** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = new sg2_table{structure_table(space->space)};
  });
}

sg2_status sg2_table_parse_json(const sg2_field* field, const char* json, sg2_table** out) {
  return guarded([&] {
    require(field, "field");
    require(json, "json");
    require(out, "out");
    *out = new sg2_table{io::table_from_json(field->field, io::parse_json(json))};
  });
}

sg2_status sg2_table_render(const sg2_table* table, sg2_format format, char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    switch (format) {
      case SG2_FORMAT_JSON: *out = dup_string(dump(io::to_json(table->table))); break;
      case SG2_FORMAT_LATEX: *out = dup_string(io::table_latex(table->table)); break;
      default: *out = dup_string(io::table_text(table->table)); break;
    }
  });
}

int sg2_table_equal(const sg2_table* a, const sg2_table* b) {
  return a != nullptr && b != nullptr && a->table == b->table ? 1 : 0;
}

void sg2_table_free(sg2_table* table) { delete table; }

const char* sg2_golden_builtin(void) { return io::builtin_golden().data(); }

sg2_status sg2_verify(const sg2_field* field, const char* golden, sg2_report** out) {
  return guarded([&] {
    require(field, "field");
    require(out, "out");
    const std::string_view data = golden != nullptr ? std::string_view(golden) : io::builtin_golden();
    *out = new sg2_report{run_verification(field->field, data)};
  });
}

int sg2_report_ok(const sg2_report* report) {
  return report != nullptr && report->report.ok() ? 1 : 0;
}

sg2_status sg2_report_counts(const sg2_report* report, size_t* passed, size_t* total) {
  return guarded([&] {
    require(report, "report");
    require(passed, "passed");
    require(total, "total");
    *passed = report->report.passed();
    *total = report->report.checks.size();
  });
}

sg2_status sg2_report_render(const sg2_report* report, sg2_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    const VerifyReport& r = report->report;
    if (format == SG2_FORMAT_JSON) {
      io::json checks = io::json::array();
      for (const CheckResult& c : r.checks) {
        io::json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
      }
      io::json j;
      j["field"] = r.field.to_string();
      j["passed"] = r.passed();
      j["total"] = r.checks.size();
      j["checks"] = std::move(checks);
      *out = dup_string(dump(j));
    } else if (format == SG2_FORMAT_LATEX) {
      std::string text = "\\begin{tabular}{ll}\n";
      for (const CheckResult& c : r.checks) {
        text += c.name + " & " + (c.passed ? "pass" : "FAIL") + " \\\\\n";
      }
      text += "\\end{tabular}\n";
      *out = dup_string(text);
    } else {
      *out = dup_string(r.text());
    }
  });
}

void sg2_report_free(sg2_report* report) { delete report; }

}  // extern "C"
