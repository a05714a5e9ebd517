#include <gtest/gtest.h>

#include "splitg2/io.hpp"
#include "splitg2/liestruct.hpp"
#include "test_support.hpp"

using namespace splitg2;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

const DerivationSpace& q_space() {
  static const DerivationSpace space = solve_derivations(kQ);
  return space;
}

const BracketTable& q_table() {
  static const BracketTable table = structure_table(q_space());
  return table;
}

const Map8& x(std::size_t k) { return q_space().basis[k - 1]; }

std::string cell(std::size_t i, std::size_t j) { return format_cell(q_table(), i - 1, j - 1); }

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(x(1), x(2)).matrix(), mat_scale(Scalar::from_int(kQ, -2), x(14).matrix()));
  EXPECT_TRUE(bracket(x(4), x(8)).matrix().is_zero());
  EXPECT_TRUE(bracket(x(9), x(9)).matrix().is_zero());
}

TEST(StructureTable, KnownCells) {
  EXPECT_EQ(cell(1, 13), "3x7");
  EXPECT_EQ(cell(12, 13), "-2x3");
  EXPECT_EQ(cell(14, 3), "x4+x8");
  EXPECT_EQ(cell(1, 12), "2x4-x8");
  EXPECT_EQ(cell(13, 14), "-2x1");
  EXPECT_EQ(cell(1, 2), "-2x14");
  EXPECT_EQ(cell(2, 1), "2x14");
  EXPECT_EQ(cell(3, 4), "-x3");
  EXPECT_EQ(cell(3, 8), "-x3");
  for (std::size_t i = 1; i <= 14; ++i) EXPECT_EQ(cell(i, i), "0");
}

TEST(StructureTable, RequiresPinnedBasis) {
  DerivationSpace raw = q_space();
  raw.pinned = false;
  EXPECT_THROW(structure_table(raw), Error);
}

TEST(StructureTable, NotClosedWhenBasisIsCorrupted) {
  DerivationSpace bad = q_space();
  Matrix m = bad.basis[0].matrix();
  m(0, 0) = Scalar::one(kQ);
  bad.basis[0] = Map8(m);
  try {
    structure_table(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}

TEST(StructureTable, ConstantsAreSmallIntegers) {
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) {
      for (std::size_t k = 0; k < 14; ++k) {
        const Scalar& c = q_table()(i, j, k);
        ASSERT_TRUE(c.is_integer());
        EXPECT_LE(abs(c.to_integer()), 3);
      }
    }
  }
}

TEST(StructureTable, MatchesBuiltinGolden) {
  const BracketTable golden = io::parse_golden(kQ, io::builtin_golden());
  EXPECT_FALSE(first_mismatch(q_table(), golden).has_value());
  EXPECT_EQ(q_table(), golden);
}

TEST(StructureTable, DerivedAlgebraIsEverything) {
  EXPECT_EQ(rank(bracket_span_matrix(q_table())), 14u);
}

TEST(Axioms, ComputedTablePasses) {
  const AxiomReport anti = verify_antisymmetry(q_table());
  EXPECT_TRUE(anti.ok());
  EXPECT_EQ(anti.checked, 14u * 14u * 14u);
  const AxiomReport jacobi = verify_jacobi(q_table());
  EXPECT_TRUE(jacobi.ok());
  EXPECT_EQ(jacobi.checked, 364u * 14u);
}

TEST(Axioms, JacobiAgreesWithMatrixRoute) {
  // Independent route: nested commutators of the 8x8 matrices themselves.
  for (std::size_t i = 1; i <= 14; ++i) {
    for (std::size_t j = i + 1; j <= 14; ++j) {
      for (std::size_t k = j + 1; k <= 14; ++k) {
        const Matrix s = mat_add(mat_add(bracket(bracket(x(i), x(j)), x(k)).matrix(),
                                         bracket(bracket(x(j), x(k)), x(i)).matrix()),
                                 bracket(bracket(x(k), x(i)), x(j)).matrix());
        ASSERT_TRUE(s.is_zero()) << i << " " << j << " " << k;
      }
    }
  }
}

TEST(Axioms, PerturbationIsDetected) {
  BracketTable t = q_table();
  t(0, 1, 0) = t(0, 1, 0) + Scalar::one(kQ);
  const AxiomReport jacobi = verify_jacobi(t);
  EXPECT_FALSE(jacobi.ok());
  const AxiomReport anti = verify_antisymmetry(t);
  ASSERT_EQ(anti.violations.size(), 2u);
  EXPECT_EQ(anti.violations[0].i, 0);
  EXPECT_EQ(anti.violations[0].j, 1);
  EXPECT_EQ(anti.violations[0].k, 0);
}

TEST(Axioms, ZeroTablePasses) {
  const BracketTable zero(kQ, 14);
  EXPECT_TRUE(verify_jacobi(zero).ok());
  EXPECT_TRUE(verify_antisymmetry(zero).ok());
}

TEST(Killing, SymmetricInvariantNondegenerate) {
  const Matrix k = killing_form(q_table());
  EXPECT_EQ(k, k.transpose());
  EXPECT_TRUE(verify_killing_invariance(q_table(), k).ok());
  EXPECT_EQ(rank(k), 14u);
}

TEST(Killing, MatchesTraceOfAdjointProducts) {
  // ad(x_i) as a matrix acting on coefficient rows: row a is [x_i, x_a].
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < 14; ++i) {
    Matrix m(kQ, 14, 14);
    for (std::size_t a = 0; a < 14; ++a) {
      for (std::size_t b = 0; b < 14; ++b) m(a, b) = q_table()(i, a, b);
    }
    ad.push_back(m);
  }
  const Matrix k = killing_form(q_table());
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) EXPECT_EQ(k(i, j), mat_mul(ad[i], ad[j]).trace());
  }
}

TEST(ReduceTable, DirectPrimeFieldTablesAgree) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f = FieldSpec::prime(p);
    const DerivationSpace s = solve_derivations(f);
    ASSERT_TRUE(s.pinned);
    EXPECT_EQ(structure_table(s), reduce_table(q_table(), f)) << "p = " << p;
  }
}

TEST(ReduceTable, RejectsFractions) {
  BracketTable t(kQ, 2);
  t(0, 1, 0) = Scalar::parse(kQ, "1/2");
  EXPECT_THROW(reduce_table(t, FieldSpec::prime(5)), Error);
}

TEST(FormatCell, Rendering) {
  BracketTable t(kQ, 3);
  EXPECT_EQ(format_cell(t, 0, 1), "0");
  t(0, 1, 0) = Scalar::from_int(kQ, -1);
  t(0, 1, 2) = Scalar::from_int(kQ, 1);
  EXPECT_EQ(format_cell(t, 0, 1), "-x1+x3");
  t(0, 1, 1) = Scalar::parse(kQ, "-3/2");
  EXPECT_EQ(format_cell(t, 0, 1), "-x1-3/2x2+x3");
}

TEST(FirstMismatch, ReportsRowMajorFirst) {
  BracketTable t = q_table();
  t(4, 6, 3) = Scalar::zero(kQ);
  t(9, 2, 0) = Scalar::zero(kQ);
  const auto bad = first_mismatch(t, q_table());
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->i, 4u);
  EXPECT_EQ(bad->j, 6u);
}

}  // namespace
