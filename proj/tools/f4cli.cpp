// Command-line front end: build the derivation algebra of the split Albert
// algebra and print or write the verification reports and Lie structure.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "f4/dersolve.hpp"
#include "f4/identity_corpus.hpp"
#include "f4/json_io.hpp"
#include "f4/lie.hpp"
#include "f4/paperparam.hpp"

namespace {

using namespace f4;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string field_text = "q";
  FieldSpec field;
  std::string out;
  bool json = false;
  int threads = 1;  // accepted for compatibility; the computation is single-threaded
  std::string corpus_path;
  std::string basis = "paper";
  std::string dump_constraints;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const RunConfig& cfg, const json& j) {
  if (cfg.out.empty()) {
    if (cfg.json) std::cout << j.dump(1) << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << j.dump(1) << '\n';
  if (!f) throw InputError("write failed: " + cfg.out);
}

std::string pivot_diff(const std::vector<int>& here, const std::vector<int>& q) {
  std::vector<int> only_here, only_q;
  std::set_difference(here.begin(), here.end(), q.begin(), q.end(), std::back_inserter(only_here));
  std::set_difference(q.begin(), q.end(), here.begin(), here.end(), std::back_inserter(only_q));
  if (only_here.empty() && only_q.empty()) return "identical";
  std::ostringstream os;
  os << "DIFFERENT: " << only_here.size() << " pivot columns only here, " << only_q.size() << " only over Q";
  for (int c : only_here) os << "\n  +" << c + 1;
  for (int c : only_q) os << "\n  -" << c + 1;
  return os.str();
}

int cmd_solve(const RunConfig& cfg) {
  auto sys = assemble_constraints(cfg.field);
  if (!cfg.dump_constraints.empty()) {
    std::ofstream f(cfg.dump_constraints);
    if (!f) throw InputError("cannot write " + cfg.dump_constraints);
    sys.write_matrix_market(f);
  }
  auto res = solve_nullspace(sys);
  if (!cfg.json || !cfg.out.empty()) {
    std::cout << "field " << cfg.field << ": " << sys.num_rows() << " equations, " << res.distinct_rows
              << " distinct nonzero, rank " << res.pivot_columns.size() << "\n";
    if (!cfg.field.is_rational()) {
      auto q = solve_nullspace(assemble_constraints(FieldSpec::rationals()));
      std::cout << "pivot columns vs Q: " << pivot_diff(res.pivot_columns, q.pivot_columns) << "\n";
    }
    std::cout << "dim = " << res.basis.size() << "\n";
  }
  write_output(cfg, to_json(res.basis));
  return res.basis.size() == static_cast<std::size_t>(kNumParams) ? kOk : kVerifyFailed;
}

int cmd_paper_check(const RunConfig& cfg) {
  const FieldSpec& f = cfg.field;
  bool all = true;
  json report = json::object();
  auto line = [&](const std::string& name, bool pass, const std::string& detail) {
    all = all && pass;
    if (!cfg.json) std::cout << (pass ? "PASS  " : "FAIL  ") << name << (detail.empty() ? "" : "  " + detail) << "\n";
    report[name] = {{"pass", pass}, {"detail", detail}};
  };

  std::string corpus_text = cfg.corpus_path.empty() ? std::string(default_identity_corpus()) : read_file(cfg.corpus_path);
  auto corpus = paper_identity_corpus(f, corpus_text);
  json failures = json::array();
  for (const auto& r : corpus.results) {
    if (r.pass) continue;
    if (!cfg.json) std::cout << "FAIL  line " << r.line << ": " << r.text << "  (" << r.detail << ")\n";
    failures.push_back({{"line", r.line}, {"text", r.text}, {"detail", r.detail}});
  }
  line("identity corpus", corpus.all_pass(),
       std::to_string(corpus.results.size() - corpus.failures()) + "/" + std::to_string(corpus.results.size()));
  report["identity corpus"]["failures"] = failures;

  auto sys = assemble_constraints(f);
  auto gens = paper_generators(f);
  int bad = 0;
  std::string first_bad;
  for (int k = 0; k < kNumParams; ++k) {
    if (auto row = first_violated_row(gens.members[k], sys)) {
      if (bad++ == 0) first_bad = parameter_names()[k] + " violates " + sys.tag(*row).describe();
    }
  }
  line("generators are derivations", bad == 0, bad == 0 ? "52/52" : first_bad);
  int rank = basis_rank(gens);
  line("generator rank", rank == kNumParams, std::to_string(rank));

  bool bridge = true;
  Coord27 one = coor(AlbertElement::one(f));
  for (const auto& d : gens.members) {
    auto r = row_times(one, d.transpose());
    bridge = bridge && std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  line("supermatrix kills Coor(ONE)", bridge, "");

  auto solver = solve_nullspace(sys).basis;
  if (solver.size() == static_cast<std::size_t>(kNumParams) && span_equals(solver, gens)) {
    auto rec = recover_phi3(solver);
    std::vector<std::pair<int, Scalar>> form;
    for (int k = 0; k < kNumParams; ++k) form.emplace_back(k, rec.recovered[k]);
    line("phi3 relation", rec.matches(), "phi3 = " + format_linear(form, parameter_names()));
  } else {
    line("phi3 relation", false, "solver space differs from the generator span");
  }

  if (cfg.json) std::cout << json{{"field", to_json(f)}, {"checks", report}, {"pass", all}}.dump(1) << "\n";
  return all ? kOk : kVerifyFailed;
}

int cmd_cross_validate(const RunConfig& cfg) {
  auto gens = paper_generators(cfg.field);
  auto solver = nullspace(assemble_constraints(cfg.field));
  bool eq = !solver.members.empty() && span_equals(gens, solver);
  int ra = basis_rank(gens);
  int rb = solver.members.empty() ? 0 : basis_rank(solver);
  std::cout << "paper span " << (eq ? "==" : "!=") << " solver span (" << ra << " = " << rb << ")\n";
  if (!eq) {
    for (std::size_t i = 0; i < solver.size(); ++i) {
      if (!express_in_basis(gens, solver.members[i])) {
        std::cout << "witness: solver basis member " << i + 1 << " is outside the generator span\n";
        break;
      }
    }
  }
  return eq ? kOk : kVerifyFailed;
}

DerivationBasis chosen_basis(const RunConfig& cfg) {
  if (cfg.basis == "paper") return paper_generators(cfg.field);
  return nullspace(assemble_constraints(cfg.field));
}

int cmd_structure(const RunConfig& cfg) {
  auto sc = structure_constants(chosen_basis(cfg), cfg.basis);
  auto jac = jacobi_check(sc);
  if (!cfg.json || !cfg.out.empty()) {
    std::cout << "basis " << cfg.basis << " over " << cfg.field << ": " << sc.entries().size()
              << " nonzero structure constants, all " << sc.dim() * (sc.dim() - 1) / 2 << " brackets closed\n";
    std::cout << "Jacobi: " << jac.triples_checked << " triples, "
              << (jac.ok() ? "all zero" : "FAILS at (" + std::to_string((*jac.first_failure)[0] + 1) + ", " +
                                              std::to_string((*jac.first_failure)[1] + 1) + ", " +
                                              std::to_string((*jac.first_failure)[2] + 1) + ")")
              << "\n";
  }
  write_output(cfg, to_json(sc));
  return jac.ok() ? kOk : kVerifyFailed;
}

int cmd_killing(const RunConfig& cfg) {
  auto g = killing(structure_constants(chosen_basis(cfg), cfg.basis));
  int rank = killing_rank(g);
  if (!cfg.json || !cfg.out.empty()) std::cout << "Killing form over " << cfg.field << ": rank " << rank << "\n";
  write_output(cfg, to_json(g));
  return kOk;
}

int cmd_generic(const RunConfig& cfg) {
  const auto& table = GeneratorTable::builtin();
  if (!cfg.json && cfg.out.empty()) {
    std::cout << symbolic_generic_table(cfg.field);
    return kOk;
  }
  json images = json::object();
  for (auto b : BasisElement::all()) {
    json terms = json::array();
    for (const auto& t : table.image(b)) {
      Scalar c(cfg.field, t.coeff);
      if (!c.is_zero()) terms.push_back({t.slot + 1, table.params()[t.param], to_json(c)});
    }
    images[b.name()] = terms;
  }
  write_output(cfg, {{"field", to_json(cfg.field)}, {"parameters", table.params()}, {"images", images}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split f4 as the derivation algebra of the split Albert algebra"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  RunConfig cfg;
  app.add_option("--field", cfg.field_text, "q or gf:<p>")->capture_default_str();
  app.add_option("--out", cfg.out, "write the machine-readable result to this file");
  app.add_flag("--json", cfg.json, "print JSON instead of text");
  app.add_option("--threads", cfg.threads, "worker hint (ignored; output never depends on it)")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "nullspace of the derivation constraints");
  solve->add_option("--dump-constraints", cfg.dump_constraints, "write the system as row/col/value triplets");
  auto* check = app.add_subcommand("paper-check", "identity corpus, generator audit, phi3 and supermatrix checks");
  check->add_option("--corpus", cfg.corpus_path, "identity file to use instead of the built-in corpus");
  auto* cross = app.add_subcommand("cross-validate", "span of the generators vs. the solver nullspace");
  auto* structure = app.add_subcommand("structure", "structure constants and Jacobi check");
  auto* kill = app.add_subcommand("killing", "Killing form and its rank");
  for (auto* sub : {structure, kill}) {
    sub->add_option("--basis", cfg.basis, "paper or solver")
        ->check(CLI::IsMember({"paper", "solver"}))
        ->capture_default_str();
  }
  auto* generic = app.add_subcommand("generic", "the 52-parameter generic derivation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    cfg.field = FieldSpec::parse(cfg.field_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(cfg);
    if (*check) return cmd_paper_check(cfg);
    if (*cross) return cmd_cross_validate(cfg);
    if (*structure) return cmd_structure(cfg);
    if (*kill) return cmd_killing(cfg);
    if (*generic) return cmd_generic(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonClosureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
