#include <gtest/gtest.h>

#include <algorithm>

#include "f4/lie.hpp"
#include "f4/paperparam.hpp"
#include "test_support.hpp"

using namespace f4;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const StructureConstants& paper_sc() {
  static const StructureConstants sc = structure_constants(paper_generators(Q));
  return sc;
}

std::vector<Scalar> random_coeffs(const FieldSpec& f, std::mt19937_64& rng) {
  std::vector<Scalar> x;
  for (int k = 0; k < kNumParams; ++k) x.push_back(testutil::random_scalar(f, rng));
  return x;
}

DerivationMatrix combine(const DerivationBasis& b, const std::vector<Scalar>& x) {
  DerivationMatrix d = DerivationMatrix::zero(b.field);
  for (std::size_t k = 0; k < x.size(); ++k) d = d + x[k] * b.members[k];
  return d;
}

}  // namespace

TEST(Lie, BracketBasics) {
  auto gens = paper_generators(Q);
  auto sys = assemble_constraints(Q);
  const auto& a = gens.members[3];
  const auto& b = gens.members[40];
  EXPECT_TRUE(bracket(a, a).is_zero());
  EXPECT_EQ(bracket(a, b), Scalar(Q, -1LL) * bracket(b, a));
  EXPECT_TRUE(is_derivation(bracket(a, b), sys));
  EXPECT_TRUE(bracket(DerivationMatrix::identity(Q), b).is_zero());
  EXPECT_EQ(trace_form_27(a, b), trace_form_27(b, a));
}

TEST(Lie, StructureConstantsOverQ) {
  const auto& sc = paper_sc();
  EXPECT_EQ(sc.dim(), 52);
  EXPECT_EQ(sc.basis_name(), "paper");
  EXPECT_FALSE(sc.entries().empty());
  for (const auto& e : sc.entries()) {
    EXPECT_LT(e.i, e.j);
    EXPECT_FALSE(e.value.is_zero());
  }
  for (int i = 0; i < 52; ++i) {
    for (int k = 0; k < 52; ++k) EXPECT_TRUE(sc.at(i, i, k).is_zero());
  }
  for (const auto& e : sc.entries()) EXPECT_EQ(sc.at(e.j, e.i, e.k), -e.value);

  // Every stored bracket reproduces the matrix commutator.
  auto gens = paper_generators(Q);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick(0, 51);
  for (int n = 0; n < 40; ++n) {
    int i = pick(rng), j = pick(rng);
    DerivationMatrix expect = DerivationMatrix::zero(Q);
    for (int k = 0; k < 52; ++k) expect = expect + sc.at(i, j, k) * gens.members[k];
    EXPECT_EQ(bracket(gens.members[i], gens.members[j]), expect) << i << "," << j;
  }
}

TEST(Lie, CoefficientBracketMatchesMatrices) {
  const auto& sc = paper_sc();
  auto gens = paper_generators(Q);
  std::mt19937_64 rng(37);
  for (int n = 0; n < 20; ++n) {
    auto x = random_coeffs(Q, rng), y = random_coeffs(Q, rng);
    EXPECT_EQ(combine(gens, sc.bracket(x, y)), bracket(combine(gens, x), combine(gens, y)));
  }
}

class ReducedConstants : public ::testing::TestWithParam<int> {};

TEST_P(ReducedConstants, EqualReductionOfRationalConstants) {
  auto f = FieldSpec::prime(static_cast<std::uint64_t>(GetParam()));
  auto sc = structure_constants(paper_generators(f));
  for (int i = 0; i < 52; ++i) {
    for (int j = i + 1; j < 52; ++j) {
      for (int k = 0; k < 52; ++k) {
        ASSERT_EQ(sc.at(i, j, k), Scalar(f, paper_sc().at(i, j, k).rational())) << i << "," << j << "," << k;
      }
    }
  }
  EXPECT_TRUE(jacobi_check(sc).ok());
}

INSTANTIATE_TEST_SUITE_P(Primes, ReducedConstants, ::testing::Values(2, 7));

TEST(Lie, JacobiOverQ) {
  auto rep = jacobi_check(paper_sc());
  EXPECT_EQ(rep.triples_checked, 22100u);
  EXPECT_TRUE(rep.ok());
}

TEST(Lie, JacobiDetectsCorruption) {
  auto entries = paper_sc().entries();
  entries.front().value = entries.front().value + Scalar::one(Q);
  StructureConstants bad(Q, 52, "corrupt", entries);
  EXPECT_FALSE(jacobi_check(bad).ok());
}

TEST(Lie, KillingForm) {
  auto g = killing(paper_sc());
  ASSERT_EQ(g.size(), 52u);
  for (int i = 0; i < 52; ++i) {
    for (int j = 0; j < 52; ++j) EXPECT_EQ(g[i][j], g[j][i]);
  }
  EXPECT_EQ(killing_rank(g), 52);

  // kappa([x,y], z) = kappa(x, [y,z])
  std::mt19937_64 rng(41);
  for (int n = 0; n < 30; ++n) {
    auto x = random_coeffs(Q, rng), y = random_coeffs(Q, rng), z = random_coeffs(Q, rng);
    EXPECT_EQ(killing_value(g, paper_sc().bracket(x, y), z), killing_value(g, x, paper_sc().bracket(y, z)));
  }

  // trace(ad x ad y) from the adjoint matrices directly.
  const auto& sc = paper_sc();
  for (int n = 0; n < 5; ++n) {
    auto x = random_coeffs(Q, rng), y = random_coeffs(Q, rng);
    Scalar tr = Scalar::zero(Q);
    for (int k = 0; k < 52; ++k) {
      std::vector<Scalar> ek(52, Scalar::zero(Q));
      ek[k] = Scalar::one(Q);
      tr += sc.bracket(x, sc.bracket(y, ek))[k];
    }
    EXPECT_EQ(killing_value(g, x, y), tr);
  }
}

// Structure constants in the solver basis describe the same algebra: the
// change-of-basis map P (paper coefficients of each solver member) carries
// one bracket to the other.
TEST(Lie, BasisChangeConsistency) {
  auto gens = paper_generators(Q);
  auto solver = nullspace(assemble_constraints(Q));
  auto sc_solver = structure_constants(solver, "solver");
  EXPECT_EQ(sc_solver.basis_name(), "solver");
  EXPECT_TRUE(jacobi_check(sc_solver).ok());
  EXPECT_EQ(killing_rank(killing(sc_solver)), 52);

  std::vector<std::vector<Scalar>> P;
  for (const auto& d : solver.members) P.push_back(*express_in_basis(gens, d));
  auto to_paper = [&](const std::vector<Scalar>& x) {
    std::vector<Scalar> out(52, Scalar::zero(Q));
    for (int m = 0; m < 52; ++m) {
      for (int k = 0; k < 52; ++k) out[k] += x[m] * P[m][k];
    }
    return out;
  };
  std::mt19937_64 rng(43);
  for (int n = 0; n < 20; ++n) {
    auto x = random_coeffs(Q, rng), y = random_coeffs(Q, rng);
    EXPECT_EQ(to_paper(sc_solver.bracket(x, y)), paper_sc().bracket(to_paper(x), to_paper(y)));
  }
}

TEST(Lie, RejectsBadBases) {
  auto gens = paper_generators(Q);
  auto dependent = gens;
  dependent.members[1] = dependent.members[0];
  EXPECT_THROW(structure_constants(dependent), std::invalid_argument);

  // Two generators whose bracket is not a combination of the pair.
  const auto& entries = paper_sc().entries();
  auto it = std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.k != e.i && e.k != e.j; });
  ASSERT_NE(it, entries.end());
  const auto& e = *it;
  DerivationBasis pair{Q, {gens.members[e.i], gens.members[e.j]}};
  try {
    structure_constants(pair);
    FAIL() << "pair closed under bracket";
  } catch (const NonClosureError& err) {
    EXPECT_EQ(err.i, 0);
    EXPECT_EQ(err.j, 1);
  }
}
