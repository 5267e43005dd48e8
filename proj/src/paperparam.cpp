#include "f4/paperparam.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "f4/embedded_data.hpp"
#include "f4/field_ops.hpp"
#include "f4/linalg.hpp"

namespace f4 {

using nlohmann::json;

GeneratorTable GeneratorTable::from_json(std::string_view text) {
  GeneratorTable t;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("generator table: ") + e.what());
  }
  auto fail = [](const std::string& why) { return std::runtime_error("generator table: " + why); };
  try {
    t.params_ = j.at("parameters").get<std::vector<std::string>>();
    if (t.params_.size() != static_cast<std::size_t>(kNumParams)) {
      throw fail("expected 52 parameters, found " + std::to_string(t.params_.size()));
    }
    auto index_of = [&](const std::string& name) {
      int k = t.param_index(name);
      if (k < 0) throw fail("unknown parameter '" + name + "'");
      return k;
    };
    for (const auto& [name, terms] : j.at("images").items()) {
      BasisElement b = BasisElement::parse(name);
      for (const auto& term : terms) {
        int slot = term.at(0).get<int>();
        if (slot < 1 || slot > kAlbertDim) throw fail("slot out of range in " + name);
        t.images_[b.index()].push_back({slot - 1, index_of(term.at(1).get<std::string>()), term.at(2).get<long long>()});
      }
    }
    const auto& p3 = j.at("phi3");
    for (const auto& c : p3.at("combination")) {
      t.phi3_.emplace_back(index_of(c.at(0).get<std::string>()), c.at(1).get<long long>());
    }
    for (const auto& s : p3.at("sites")) {
      t.sites_.push_back({BasisElement::parse(s.at("basis").get<std::string>()), s.at("slot").get<int>() - 1,
                          s.at("coeff").get<long long>()});
    }
    if (j.contains("header") && j["header"].contains("reconstructed_entries")) {
      t.reconstructed_ = j["header"]["reconstructed_entries"].get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw fail(e.what());
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  return t;
}

const GeneratorTable& GeneratorTable::builtin() {
  static const GeneratorTable table = from_json(embedded::generator_table_json());
  return table;
}

int GeneratorTable::param_index(std::string_view name) const {
  for (std::size_t k = 0; k < params_.size(); ++k) {
    if (params_[k] == name) return static_cast<int>(k);
  }
  return -1;
}

const std::vector<std::string>& parameter_names() { return GeneratorTable::builtin().params(); }

namespace {

void require_params(const ParamVector& p) {
  if (p.size() != static_cast<std::size_t>(kNumParams)) {
    throw std::invalid_argument("expected 52 parameter values, got " + std::to_string(p.size()));
  }
}

template <class Ops>
std::vector<std::vector<typename Ops::T>> as_rows(const Ops& ops, const DerivationBasis& b) {
  std::vector<std::vector<typename Ops::T>> rows;
  for (const auto& m : b.members) {
    std::vector<typename Ops::T> row;
    for (const auto& s : m.unknowns()) row.push_back(ops.from_scalar(s));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Scalar phi3(const ParamVector& p) {
  require_params(p);
  const FieldSpec& f = p[0].field();
  Scalar acc = Scalar::zero(f);
  for (const auto& [k, c] : GeneratorTable::builtin().phi3_combination()) acc += Scalar(f, c) * p[k];
  return acc;
}

DerivationMatrix generic_derivation(const ParamVector& p, const GeneratorTable& table) {
  require_params(p);
  const FieldSpec& f = p[0].field();
  DerivationMatrix d = DerivationMatrix::zero(f);
  for (auto b : BasisElement::all()) {
    for (const auto& t : table.image(b)) d(t.slot, b.index()) += Scalar(f, t.coeff) * p[t.param];
  }
  return d;
}

DerivationBasis paper_generators(const FieldSpec& field, const GeneratorTable& table) {
  DerivationBasis basis{field, {}};
  for (int k = 0; k < kNumParams; ++k) {
    ParamVector p(kNumParams, Scalar::zero(field));
    p[k] = Scalar::one(field);
    basis.members.push_back(generic_derivation(p, table));
  }
  return basis;
}

bool span_equals(const DerivationBasis& a, const DerivationBasis& b) {
  if (!(a.field == b.field)) throw FieldMismatch("span_equals over different fields");
  if (a.members.empty() || b.members.empty()) throw std::invalid_argument("span_equals needs nonempty bases");
  return dispatch_field(a.field, [&](const auto& ops) {
    auto ra = as_rows(ops, a);
    auto rb = as_rows(ops, b);
    int rank_a = matrix_rank(ops, ra, kUnknowns);
    int rank_b = matrix_rank(ops, rb, kUnknowns);
    ra.insert(ra.end(), rb.begin(), rb.end());
    int rank_ab = matrix_rank(ops, ra, kUnknowns);
    return rank_a == rank_ab && rank_b == rank_ab;
  });
}

std::optional<std::vector<Scalar>> express_in_basis(const DerivationBasis& basis, const DerivationMatrix& d) {
  if (!(basis.field == d.field())) throw FieldMismatch("express_in_basis over different fields");
  return dispatch_field(basis.field, [&](const auto& ops) -> std::optional<std::vector<Scalar>> {
    SpanSolver solver(ops, as_rows(ops, basis), kUnknowns);
    DerivationBasis single{d.field(), {d}};
    auto q = solver.coefficients(as_rows(ops, single).front());
    if (!q) return std::nullopt;
    std::vector<Scalar> out;
    for (const auto& x : *q) out.push_back(ops.to_scalar(x));
    return out;
  });
}

std::optional<ParamVector> express_in_params(const DerivationMatrix& d) {
  return express_in_basis(paper_generators(d.field()), d);
}

Coord27 row_times(const Coord27& row, const DerivationMatrix& supermatrix) {
  const FieldSpec& f = supermatrix.field();
  Coord27 out;
  for (int c = 0; c < kAlbertDim; ++c) {
    Scalar acc = Scalar::zero(f);
    for (int r = 0; r < kAlbertDim; ++r) acc += row[r] * supermatrix(r, c);
    out[c] = acc;
  }
  return out;
}

Phi3Recovery recover_phi3(const DerivationBasis& basis) {
  const FieldSpec& f = basis.field;
  const auto& table = GeneratorTable::builtin();
  const int m = static_cast<int>(basis.size());
  if (m != kNumParams) throw std::invalid_argument("expected a basis of 52 derivations");
  auto paper = paper_generators(f);

  std::vector<ParamVector> params;
  for (const auto& d : basis.members) {
    auto p = express_in_basis(paper, d);
    if (!p) throw std::invalid_argument("basis member outside the span of the tabulated generators");
    params.push_back(std::move(*p));
  }

  Phi3Recovery rec;
  rec.expected.assign(kNumParams, Scalar::zero(f));
  for (const auto& [k, c] : table.phi3_combination()) rec.expected[k] += Scalar(f, c);

  // Solve sum_k w_k params[i][k] = site value of member i, via the columns.
  std::vector<std::vector<Scalar>> forms;
  for (const auto& site : table.phi3_sites()) {
    Scalar inv = Scalar(f, site.coeff).inv();
    auto w = dispatch_field(f, [&](const auto& ops) -> std::optional<std::vector<Scalar>> {
      using T = typename std::decay_t<decltype(ops)>::T;
      std::vector<std::vector<T>> cols(kNumParams, std::vector<T>(m));
      std::vector<T> target(m);
      for (int i = 0; i < m; ++i) {
        for (int k = 0; k < kNumParams; ++k) cols[k][i] = ops.from_scalar(params[i][k]);
        target[i] = ops.from_scalar(basis.members[i](site.slot, site.basis.index()) * inv);
      }
      SpanSolver solver(ops, cols, m);
      auto q = solver.coefficients(target);
      if (!q) return std::nullopt;
      std::vector<Scalar> out;
      for (const auto& x : *q) out.push_back(ops.to_scalar(x));
      return out;
    });
    if (!w) throw std::invalid_argument("parameter vectors of the basis are singular");
    forms.push_back(std::move(*w));
  }
  if (forms.empty()) throw std::invalid_argument("generator table lists no phi3 sites");
  rec.recovered = forms.front();
  rec.sites_agree = std::all_of(forms.begin(), forms.end(), [&](const auto& w) { return w == forms.front(); });
  return rec;
}

std::string format_linear(const std::vector<std::pair<int, Scalar>>& terms, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (c.is_zero()) continue;
    bool neg = c.field().is_rational() && sgn(c.rational()) < 0;
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag << ' ';
    os << names[k];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string symbolic_generic_table(const FieldSpec& field, const GeneratorTable& table) {
  using Form = std::vector<std::pair<int, Scalar>>;
  const auto& names = table.params();
  std::ostringstream out;
  for (auto b : BasisElement::all()) {
    std::array<std::map<int, Scalar>, kAlbertDim> slots;
    for (const auto& t : table.image(b)) {
      auto [it, fresh] = slots[t.slot].try_emplace(t.param, Scalar::zero(field));
      it->second += Scalar(field, t.coeff);
    }
    auto form = [&](int slot, bool negate) {
      Form f;
      for (const auto& [k, c] : slots[slot]) f.emplace_back(k, negate ? -c : c);
      return format_linear(f, names);
    };
    auto is_zero_slot = [&](int slot) {
      for (const auto& [k, c] : slots[slot]) {
        if (!c.is_zero()) return false;
      }
      return true;
    };
    // first: Coord27 offset of the octonion; conj prints sigma of it.
    auto octonion = [&](int first, bool conj) {
      bool zero = true;
      for (int i = 0; i < 8; ++i) zero = zero && is_zero_slot(first + i);
      if (zero) return std::string("zero");
      int a = conj ? first + 1 : first;
      int bb = conj ? first : first + 1;
      auto vec = [&](int start) {
        return "{" + form(start, conj) + ", " + form(start + 1, conj) + ", " + form(start + 2, conj) + "}";
      };
      return "((" + form(a, false) + " " + vec(first + 2) + ") (" + vec(first + 5) + " " + form(bb, false) + "))";
    };
    out << "D(" << b.name() << ") =\n";
    out << "  [ " << form(0, false) << " | " << octonion(3, false) << " | " << octonion(19, false) << " ]\n";
    out << "  [ " << octonion(3, true) << " | " << form(1, false) << " | " << octonion(11, false) << " ]\n";
    out << "  [ " << octonion(19, true) << " | " << octonion(11, true) << " | " << form(2, false) << " ]\n";
  }
  return out.str();
}

}  // namespace f4
