// Runs acceptance criteria 1-8 and prints one PASS/FAIL line each.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "f4/identity_corpus.hpp"
#include "f4/lie.hpp"
#include "f4/paperparam.hpp"
#include "test_support.hpp"

using namespace f4;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const FieldSpec Q = FieldSpec::rationals();

std::string phi3_text(const Phi3Recovery& r) {
  std::vector<std::pair<int, Scalar>> form;
  for (int k = 0; k < kNumParams; ++k) form.emplace_back(k, r.recovered[k]);
  return format_linear(form, parameter_names());
}

Outcome nullspace_dimensions() {
  std::ostringstream os;
  bool ok = true;
  for (const char* f : {"q", "gf:2", "gf:3", "gf:5", "gf:7", "gf:11"}) {
    auto field = FieldSpec::parse(f);
    auto n = nullspace(assemble_constraints(field)).size();
    ok = ok && n == 52;
    os << field.name() << "=" << n << " ";
  }
  return {ok, os.str()};
}

Outcome identity_corpus() {
  std::ostringstream os;
  bool ok = true;
  for (auto f : {Q, FieldSpec::prime(2)}) {
    auto rep = paper_identity_corpus(f);
    ok = ok && rep.all_pass() && rep.results.size() >= 40;
    os << f.name() << " " << rep.results.size() - rep.failures() << "/" << rep.results.size() << " ";
  }
  return {ok, os.str()};
}

Outcome generators_satisfy_rows() {
  auto sys = assemble_constraints(Q);
  auto gens = paper_generators(Q);
  int good = 0;
  for (const auto& d : gens.members) good += is_derivation(d, sys) ? 1 : 0;
  int rank = basis_rank(gens);
  return {gens.size() == 52 && good == 52 && rank == 52,
          std::to_string(good) + "/" + std::to_string(gens.size()) + " satisfy all " + std::to_string(sys.num_rows()) +
              " rows, rank " + std::to_string(rank)};
}

Outcome spans_agree() {
  std::ostringstream os;
  bool ok = true;
  for (auto f : {Q, FieldSpec::prime(5)}) {
    bool eq = span_equals(paper_generators(f), nullspace(assemble_constraints(f)));
    ok = ok && eq;
    os << f.name() << (eq ? " equal " : " differ ");
  }
  return {ok, os.str()};
}

Outcome phi3_regression() {
  auto rq = recover_phi3(nullspace(assemble_constraints(Q)));
  auto r2 = recover_phi3(nullspace(assemble_constraints(FieldSpec::prime(2))));
  std::string tq = phi3_text(rq), t2 = phi3_text(r2);
  bool ok = rq.matches() && r2.matches() && tq == "2 xi + delta1 - epsilon2 - eta1" && t2 == "delta1 + epsilon2 + eta1";
  return {ok, "Q: " + tq + "; GF(2): " + t2};
}

Outcome jordan_properties() {
  constexpr int kSamples = 200;
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20261017);
  int failures = 0;
  for (auto f : {FieldSpec::prime(101), Q}) {
    for (int n = 0; n < kSamples; ++n) {
      auto x = testutil::random_albert(f, rng), y = testutil::random_albert(f, rng), z = testutil::random_albert(f, rng);
      if (!(u_op(u_op(x, y), z) == u_op(x, u_op(y, u_op(x, z))))) ++failures;
      if (!(sharp(sharp(x)) == norm3(x) * x)) ++failures;
      if (!(norm3(u_op(x, y)) == norm3(x) * norm3(x) * norm3(y))) ++failures;
      auto a = testutil::random_octonion(f, rng), b = testutil::random_octonion(f, rng);
      if (!(onorm(a * b) == onorm(a) * onorm(b))) ++failures;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "4 properties x " << kSamples << " inputs x {GF(101), Q}, " << failures << " failures, " << secs << " s";
  return {failures == 0 && secs <= 60.0, os.str()};
}

Outcome closure_and_jacobi() {
  auto sc = structure_constants(paper_generators(Q));
  auto jac = jacobi_check(sc);
  int pairs = sc.dim() * (sc.dim() - 1) / 2;
  return {pairs == 1326 && jac.ok() && jac.triples_checked == 22100,
          std::to_string(pairs) + " brackets in span, Jacobi zero on " + std::to_string(jac.triples_checked) + " triples"};
}

Outcome killing_form() {
  auto sc = structure_constants(paper_generators(Q));
  auto g = killing(sc);
  bool symmetric = true;
  for (int i = 0; i < sc.dim(); ++i) {
    for (int j = 0; j < sc.dim(); ++j) symmetric = symmetric && g[i][j] == g[j][i];
  }
  std::mt19937_64 rng(7);
  auto combo = [&] {
    std::vector<Scalar> v;
    for (int k = 0; k < sc.dim(); ++k) v.push_back(testutil::random_scalar(Q, rng));
    return v;
  };
  int invariant = 0;
  for (int n = 0; n < 100; ++n) {
    auto x = combo(), y = combo(), z = combo();
    if (killing_value(g, sc.bracket(x, y), z) == killing_value(g, x, sc.bracket(y, z))) ++invariant;
  }
  int rank = killing_rank(g);
  std::ostringstream os;
  os << (symmetric ? "symmetric" : "NOT symmetric") << ", invariant " << invariant << "/100, rank Q=" << rank;
  for (int p : {2, 3}) {
    auto f = FieldSpec::prime(p);
    os << ", rank GF(" << p << ")=" << killing_rank(killing(structure_constants(paper_generators(f)))) << " (reported)";
  }
  return {symmetric && invariant == 100 && rank == 52, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"nullspace dimension 52 over Q and GF(2,3,5,7,11)", nullspace_dimensions},
      {"identity corpus over Q and GF(2)", identity_corpus},
      {"generators satisfy every constraint, rank 52", generators_satisfy_rows},
      {"generator span equals solver span over Q and GF(5)", spans_agree},
      {"phi3 relation", phi3_regression},
      {"Jordan and octonion property suite", jordan_properties},
      {"bracket closure and Jacobi", closure_and_jacobi},
      {"Killing form", killing_form},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
