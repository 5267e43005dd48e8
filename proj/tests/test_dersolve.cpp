#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include "f4/dersolve.hpp"
#include "test_support.hpp"

using namespace f4;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const ConstraintSystem& q_system() {
  static const ConstraintSystem sys = assemble_constraints(Q);
  return sys;
}

AlbertElement b(int i) { return basis_element<Scalar>(Q, BasisElement::from_index(i)); }

// Row of the system recomputed from u_op/triple directly: coefficient of
// unknown c = (k, s) is coordinate `coord` of the residual at the derivation
// sending basis element k to basis element s and every other one to 0.
std::map<int, Scalar> oracle_row(const RowTag& tag) {
  std::map<int, Scalar> row;
  AlbertElement lhs = AlbertElement::zero(Q);
  if (tag.kind == RowTag::Kind::Quadratic) {
    lhs = u_op(b(tag.i), b(tag.y));
  } else if (tag.kind == RowTag::Kind::Bilinear) {
    lhs = triple(b(tag.i), b(tag.y), b(tag.j));
  } else {
    lhs = AlbertElement::one(Q);
  }
  Coord27 lc = coor(lhs);
  for (int k = 0; k < kAlbertDim; ++k) {
    for (int s = 0; s < kAlbertDim; ++s) {
      auto img = b(s);
      AlbertElement res = lc[k] * img;
      if (tag.kind == RowTag::Kind::Quadratic) {
        if (k == tag.i) res = res - triple(img, b(tag.y), b(tag.i));
        if (k == tag.y) res = res - u_op(b(tag.i), img);
      } else if (tag.kind == RowTag::Kind::Bilinear) {
        if (k == tag.i) res = res - triple(img, b(tag.y), b(tag.j));
        if (k == tag.y) res = res - triple(b(tag.i), img, b(tag.j));
        if (k == tag.j) res = res - triple(b(tag.i), b(tag.y), img);
      }
      Scalar v = res.coord(tag.coord);
      if (!v.is_zero()) row.emplace(unknown_index(k, s), v);
    }
  }
  return row;
}

std::map<int, Scalar> stored_row(const ConstraintSystem& sys, std::size_t r) {
  std::map<int, Scalar> row;
  for (const auto& [c, v] : sys.row_scalars(r)) row.emplace(c, v);
  return row;
}

}  // namespace

TEST(Dersolve, UnknownLayout) {
  EXPECT_EQ(unknown_index(BasisElement::E(1), 0), 0);
  EXPECT_EQ(unknown_index(BasisElement::E(2), 0), 27);
  EXPECT_EQ(unknown_index(BasisElement::X(3, 8), 26), 728);
  std::vector<bool> seen(kUnknowns, false);
  for (auto e : BasisElement::all()) {
    for (int s = 0; s < 27; ++s) seen[unknown_index(e, s)] = true;
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
}

TEST(Dersolve, RowCounts) {
  const auto& sys = q_system();
  EXPECT_EQ(sys.num_rows(), 27u + 19683u + 255879u);
  std::size_t unit = 0, quad = 0, bil = 0;
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    switch (sys.tag(r).kind) {
      case RowTag::Kind::Unit: ++unit; break;
      case RowTag::Kind::Quadratic: ++quad; break;
      case RowTag::Kind::Bilinear: ++bil; break;
    }
  }
  EXPECT_EQ(unit, 27u);
  EXPECT_EQ(quad, 19683u);
  EXPECT_EQ(bil, 255879u);
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    for (const auto& e : sys.row(r)) ASSERT_TRUE(e.col >= 0 && e.col < kUnknowns);
  }
}

TEST(Dersolve, RowsMatchDirectEvaluation) {
  const auto& sys = q_system();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, sys.num_rows() - 1);
  std::vector<std::size_t> rows = {0, 5, 26};
  for (int n = 0; n < 200; ++n) rows.push_back(pick(rng));
  for (auto r : rows) EXPECT_EQ(stored_row(sys, r), oracle_row(sys.tag(r))) << sys.tag(r).describe();
}

// The quadratic family at b = E1, y = E2 has no D(U_b y) term since
// U_{E1} E2 = 0: it reads T(D E1, E2, E1) + U_{E1}(D E2) = 0.
TEST(Dersolve, QuadraticRowWithVanishingConstantPart) {
  const auto& sys = q_system();
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    const auto& t = sys.tag(r);
    if (t.kind != RowTag::Kind::Quadratic || t.i != 0 || t.y != 1) continue;
    for (const auto& e : sys.row(r)) {
      int block = e.col / 27;
      EXPECT_TRUE(block == 0 || block == 1) << t.describe();
    }
  }
}

TEST(Dersolve, UnitRowsSumDiagonalBlocks) {
  const auto& sys = q_system();
  for (std::size_t r = 0; r < 27; ++r) {
    ASSERT_EQ(sys.tag(r).kind, RowTag::Kind::Unit);
    auto row = sys.row(r);
    ASSERT_EQ(row.size(), 3u);
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(row[k].col, unknown_index(k, static_cast<int>(r)));
      EXPECT_EQ(row[k].coeff, 1);
    }
  }
}

TEST(Dersolve, IsDerivationBasics) {
  const auto& sys = q_system();
  EXPECT_TRUE(is_derivation(DerivationMatrix::zero(Q), sys));
  auto bad = first_violated_row(DerivationMatrix::identity(Q), sys);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(sys.tag(*bad).kind, RowTag::Kind::Unit);
  EXPECT_THROW(is_derivation(DerivationMatrix::zero(FieldSpec::prime(5)), sys), FieldMismatch);
}

TEST(Dersolve, NullspaceOverQ) {
  const auto& sys = q_system();
  auto res = solve_nullspace(sys);
  ASSERT_EQ(res.basis.size(), 52u);
  EXPECT_EQ(res.pivot_columns.size(), 677u);
  auto one = coor(AlbertElement::one(Q));
  for (const auto& d : res.basis.members) {
    EXPECT_TRUE(is_derivation(d, sys));
    auto img = d.apply(one);
    for (const auto& x : img) EXPECT_TRUE(x.is_zero());
  }
  EXPECT_EQ(basis_rank(res.basis), 52);

  // free column f carries 1 in member f and 0 in every other member
  std::vector<int> free;
  for (int c = 0, p = 0; c < kUnknowns; ++c) {
    if (p < static_cast<int>(res.pivot_columns.size()) && res.pivot_columns[p] == c) {
      ++p;
    } else {
      free.push_back(c);
    }
  }
  ASSERT_EQ(free.size(), 52u);
  for (std::size_t m = 0; m < 52; ++m) {
    auto x = res.basis.members[m].unknowns();
    for (std::size_t n = 0; n < 52; ++n) EXPECT_EQ(x[free[n]].is_one(), m == n);
  }
}

TEST(Dersolve, StrategiesAndDedupAgree) {
  const auto& sys = q_system();
  auto direct = solve_nullspace(sys);
  NullspaceOptions opts;
  opts.strategy = NullspaceOptions::Strategy::ModularSelect;
  auto modular = solve_nullspace(sys, opts);
  EXPECT_EQ(modular.pivot_columns, direct.pivot_columns);
  EXPECT_TRUE(modular.basis.members == direct.basis.members);
  EXPECT_EQ(modular.rows_eliminated, 677u);

  auto gf3 = assemble_constraints(FieldSpec::prime(3));
  opts = {};
  opts.dedup = false;
  auto full = solve_nullspace(gf3, opts);
  auto deduped = solve_nullspace(gf3);
  EXPECT_TRUE(full.basis.members == deduped.basis.members);
  EXPECT_LT(deduped.rows_eliminated, full.rows_eliminated);
  EXPECT_THROW(solve_nullspace(gf3, {NullspaceOptions::Strategy::ModularSelect, true}), std::invalid_argument);
}

TEST(Dersolve, Deterministic) {
  auto f = FieldSpec::prime(7);
  auto a = solve_nullspace(assemble_constraints(f));
  auto b2 = solve_nullspace(assemble_constraints(f));
  EXPECT_TRUE(a.basis.members == b2.basis.members);
  EXPECT_EQ(a.pivot_columns, b2.pivot_columns);
}

class PrimeNullspace : public ::testing::TestWithParam<int> {};

TEST_P(PrimeNullspace, DimensionAndPivotsMatchQ) {
  auto f = FieldSpec::prime(static_cast<std::uint64_t>(GetParam()));
  auto res = solve_nullspace(assemble_constraints(f));
  EXPECT_EQ(res.basis.size(), 52u);
  EXPECT_EQ(res.pivot_columns, solve_nullspace(q_system()).pivot_columns);
}

INSTANTIATE_TEST_SUITE_P(Primes, PrimeNullspace, ::testing::Values(3, 5, 7, 11, 101));

// Over GF(2) the kernel has the same dimension but one pivot moves.
TEST(Dersolve, CharacteristicTwoPivots) {
  auto res = solve_nullspace(assemble_constraints(FieldSpec::prime(2)));
  EXPECT_EQ(res.basis.size(), 52u);
  auto q = solve_nullspace(q_system()).pivot_columns;
  std::vector<int> only2, onlyq;
  std::set_difference(res.pivot_columns.begin(), res.pivot_columns.end(), q.begin(), q.end(), std::back_inserter(only2));
  std::set_difference(q.begin(), q.end(), res.pivot_columns.begin(), res.pivot_columns.end(), std::back_inserter(onlyq));
  EXPECT_EQ(only2, std::vector<int>{560});
  EXPECT_EQ(onlyq, std::vector<int>{504});
}

// D(U_x y) = T(Dx, y, x) + U_x(Dy) for random x, y, not just basis elements.
TEST(Dersolve, SolutionsAreDerivationsOnRandomElements) {
  auto f = FieldSpec::prime(101);
  auto basis = nullspace(assemble_constraints(f));
  ASSERT_EQ(basis.size(), 52u);
  std::mt19937_64 rng(13);
  for (int n = 0; n < 100; ++n) {
    const auto& D = basis.members[n % 52];
    auto x = testutil::random_albert(f, rng), y = testutil::random_albert(f, rng);
    ASSERT_EQ(D.apply(u_op(x, y)), triple(D.apply(x), y, x) + u_op(x, D.apply(y)));
  }
}

TEST(Dersolve, MatrixMarketDump) {
  std::ostringstream os;
  q_system().write_matrix_market(os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("%%MatrixMarket", 0), 0u);
  std::getline(in, line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  in >> rows >> cols >> nnz;
  EXPECT_EQ(rows, q_system().num_rows());
  EXPECT_EQ(cols, 729u);
  EXPECT_EQ(nnz, q_system().num_entries());
  long long r, c, v;
  in >> r >> c >> v;
  EXPECT_EQ(r, 1);
  EXPECT_EQ(c, 1);
  EXPECT_EQ(v, 1);
}

TEST(Dersolve, DerivationMatrixAlgebra) {
  auto I = DerivationMatrix::identity(Q);
  auto Z = DerivationMatrix::zero(Q);
  EXPECT_TRUE((I - I).is_zero());
  EXPECT_EQ(I * I, I);
  EXPECT_EQ(I.transpose(), I);
  EXPECT_EQ(Z + I, I);
  DerivationMatrix D = DerivationMatrix::zero(Q);
  D(5, 2) = Scalar::one(Q);
  EXPECT_TRUE(D(5, 2).is_one());
  EXPECT_EQ(DerivationMatrix::from_unknowns(Q, D.unknowns()), D);
  EXPECT_EQ(D.apply(b(2)), b(5));
  EXPECT_TRUE(D.apply(b(5)).d1.is_zero());
}
