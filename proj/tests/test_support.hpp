#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "splitg2/dergen.hpp"

namespace splitg2::testing {

inline const FieldSpec kQ = FieldSpec::rationals();

/// Small random scalar; rationals get numerators in [-9, 9] and denominators in [1, 5].
inline Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  if (field.is_rational()) return Scalar::from_rational(field, mpq_class(num(rng), den(rng)));
  std::uniform_int_distribution<std::uint64_t> res(0, field.modulus() - 1);
  return Scalar::from_integer(field, mpz_class(static_cast<unsigned long>(res(rng))));
}

inline Scalar random_nonzero(const FieldSpec& field, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

inline ZornMatrix random_zorn(const FieldSpec& field, std::mt19937_64& rng) {
  Coord8 c;
  for (Scalar& s : c) s = random_scalar(field, rng);
  return zorn_of_coords(c);
}

inline Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng, int zero_percent = 0) {
  Matrix m(field, rows, cols);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (pct(rng) >= zero_percent) m(i, j) = random_scalar(field, rng);
    }
  }
  return m;
}

inline Matrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                long lo = -6, long hi = 6) {
  std::uniform_int_distribution<long> d(lo, hi);
  Matrix m(kQ, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(kQ, d(rng));
  }
  return m;
}

inline DerivationParams random_params(const FieldSpec& field, std::mt19937_64& rng) {
  DerivationParams p = DerivationParams::zero(field);
  for (Scalar& s : p.values) s = random_scalar(field, rng);
  return p;
}

inline Scalar S(const FieldSpec& field, const char* text) { return Scalar::parse(field, text); }
inline Scalar S(const char* text) { return Scalar::parse(kQ, text); }

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("splitg2-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  return dir;
}

/// Runs a shell command, capturing stdout and stderr separately.
inline CommandResult run_command(const std::string& cmd) {
  const auto dir = scratch_dir("cmd");
  const auto out = dir / "stdout";
  const auto err = dir / "stderr";
  const std::string full = cmd + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(full.c_str());
  CommandResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove_all(dir);
  return r;
}

}  // namespace splitg2::testing
