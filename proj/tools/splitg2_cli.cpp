// splitg2 command-line front end. Uses only the C interface of libsplitg2.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "splitg2/splitg2.h"

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageOrParse = 2,
  kMathError = 3,
  kInternal = 4,
};

struct Options {
  std::string field = "q";
  std::string format = "text";
  int verbose = 0;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FieldPtr = std::unique_ptr<sg2_field, Deleter<sg2_field, sg2_field_free>>;
using OctonionPtr = std::unique_ptr<sg2_octonion, Deleter<sg2_octonion, sg2_octonion_free>>;
using MatrixPtr = std::unique_ptr<sg2_matrix, Deleter<sg2_matrix, sg2_matrix_free>>;
using SpacePtr = std::unique_ptr<sg2_space, Deleter<sg2_space, sg2_space_free>>;
using TablePtr = std::unique_ptr<sg2_table, Deleter<sg2_table, sg2_table_free>>;
using ReportPtr = std::unique_ptr<sg2_report, Deleter<sg2_report, sg2_report_free>>;

/// Carries a failed C call up to main with the exit code it maps to.
struct Failure {
  int exit_code;
};

int exit_code_for(sg2_status s) {
  switch (s) {
    case SG2_ERR_PARSE:
    case SG2_ERR_INVALID_MODULUS:
    case SG2_ERR_INVALID_ARGUMENT:
      return kUsageOrParse;
    case SG2_ERR_INTERNAL:
      return kInternal;
    default:
      return kMathError;
  }
}

void check(sg2_status s, const char* context) {
  if (s == SG2_OK) return;
  std::cerr << "error: " << context << ": " << sg2_status_name(s) << ": " << sg2_last_error()
            << "\n";
  throw Failure{exit_code_for(s)};
}

void emit(char* text) {
  std::fputs(text, stdout);
  sg2_string_free(text);
}

sg2_format parse_format(const std::string& f) {
  if (f == "json") return SG2_FORMAT_JSON;
  if (f == "latex") return SG2_FORMAT_LATEX;
  return SG2_FORMAT_TEXT;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw Failure{kUsageOrParse};
  }
  buf << in.rdbuf();
  return buf.str();
}

class Timer {
 public:
  Timer(const Options& opts, const char* what) : opts_(opts), what_(what) {}
  ~Timer() {
    if (opts_.verbose == 0) return;
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[" << what_ << "] " << ms << " ms\n";
  }

 private:
  const Options& opts_;
  const char* what_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

FieldPtr make_field(const Options& opts) {
  sg2_field* f = nullptr;
  check(sg2_field_parse(opts.field.c_str(), &f), "--field");
  return FieldPtr(f);
}

int cmd_mul(const Options& opts, const std::string& lhs, const std::string& rhs) {
  FieldPtr field = make_field(opts);
  sg2_octonion* a = nullptr;
  check(sg2_octonion_parse(field.get(), lhs.c_str(), &a), "left operand");
  OctonionPtr left(a);
  sg2_octonion* b = nullptr;
  check(sg2_octonion_parse(field.get(), rhs.c_str(), &b), "right operand");
  OctonionPtr right(b);
  sg2_octonion* p = nullptr;
  check(sg2_octonion_mul(left.get(), right.get(), &p), "mul");
  OctonionPtr product(p);
  char* text = nullptr;
  check(sg2_octonion_render(product.get(), parse_format(opts.format), &text), "render");
  emit(text);
  return kOk;
}

int cmd_derive(const Options& opts) {
  FieldPtr field = make_field(opts);
  sg2_space* s = nullptr;
  {
    Timer t(opts, "solve");
    check(sg2_space_solve(field.get(), &s), "derive");
  }
  SpacePtr space(s);
  char* text = nullptr;
  check(sg2_space_render(space.get(), parse_format(opts.format), &text), "render");
  emit(text);
  return kOk;
}

int cmd_table(const Options& opts) {
  FieldPtr field = make_field(opts);
  sg2_space* s = nullptr;
  check(sg2_space_solve(field.get(), &s), "derive");
  SpacePtr space(s);
  sg2_table* t = nullptr;
  {
    Timer timer(opts, "table");
    check(sg2_table_compute(space.get(), &t), "table");
  }
  TablePtr table(t);
  char* text = nullptr;
  check(sg2_table_render(table.get(), parse_format(opts.format), &text), "render");
  emit(text);
  return kOk;
}

int cmd_verify(const Options& opts, const std::string& golden_path) {
  FieldPtr field = make_field(opts);
  std::string golden;
  if (!golden_path.empty()) golden = read_input(golden_path);
  sg2_report* r = nullptr;
  {
    Timer t(opts, "verify");
    check(sg2_verify(field.get(), golden_path.empty() ? nullptr : golden.c_str(), &r), "verify");
  }
  ReportPtr report(r);
  char* text = nullptr;
  check(sg2_report_render(report.get(), parse_format(opts.format), &text), "render");
  emit(text);
  if (sg2_report_ok(report.get())) return kOk;
  if (opts.format != "text") {
    // Name the failures on stderr too when stdout carries structured data.
    char* plain = nullptr;
    check(sg2_report_render(report.get(), SG2_FORMAT_TEXT, &plain), "render");
    std::cerr << plain;
    sg2_string_free(plain);
  }
  return kVerificationFailed;
}

int cmd_recon(const Options& opts, const std::string& path) {
  FieldPtr field = make_field(opts);
  const std::string json = read_input(path);
  sg2_matrix* m = nullptr;
  check(sg2_matrix_parse_json(field.get(), json.c_str(), &m), path.c_str());
  MatrixPtr matrix(m);
  char* text = nullptr;
  check(sg2_recon(matrix.get(), parse_format(opts.format), &text), "recon");
  emit(text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split octonions, their derivation algebra and its structure constants."};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_option("--field", opts.field, "Base field: q or fp:<p>")->capture_default_str();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", opts.verbose, "Timing and diagnostics on stderr");

  std::string lhs, rhs;
  auto* mul = app.add_subcommand("mul", "Multiply two octonions (basis names or Zorn JSON)");
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();

  auto* derive = app.add_subcommand("derive", "Solve for the derivation algebra");
  auto* table = app.add_subcommand("table", "Print the structure-constant table");

  std::string golden;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--golden", golden, "Golden table file ('i j k c' lines)");

  std::string recon_path;
  auto* recon = app.add_subcommand("recon", "Express an 8x8 matrix in the basis x1..x14");
  recon->add_option("file", recon_path, "Matrix JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageOrParse;
  }

  try {
    if (*mul) return cmd_mul(opts, lhs, rhs);
    if (*derive) return cmd_derive(opts);
    if (*table) return cmd_table(opts);
    if (*verify) return cmd_verify(opts, golden);
    if (*recon) return cmd_recon(opts, recon_path);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kUsageOrParse;
}
