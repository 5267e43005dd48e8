#include "f4/identity_corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "f4/embedded_data.hpp"

namespace f4 {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

CorpusOperand parse_operand(const std::string& s) {
  CorpusOperand op;
  if (s == "ONE") {
    op.kind = CorpusOperand::Kind::One;
  } else if (s == "ZERO") {
    op.kind = CorpusOperand::Kind::Zero;
  } else {
    op.kind = CorpusOperand::Kind::Basis;
    op.basis = BasisElement::parse(s);
  }
  return op;
}

std::string describe(const AlbertElement& x) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kAlbertDim; ++k) {
    if (x.coord(k).is_zero()) continue;
    if (!first) os << " + ";
    os << x.coord(k) << "*" << BasisElement::from_index(k).name();
    first = false;
  }
  return first ? "ZERO" : os.str();
}

}  // namespace

AlbertElement CorpusOperand::value(const FieldSpec& field) const {
  switch (kind) {
    case Kind::One: return AlbertElement::one(field);
    case Kind::Zero: return AlbertElement::zero(field);
    default: return basis_element<Scalar>(field, basis);
  }
}

std::string CorpusOperand::name() const {
  switch (kind) {
    case Kind::One: return "ONE";
    case Kind::Zero: return "ZERO";
    default: return basis.name();
  }
}

CorpusIdentity CorpusIdentity::parse(std::string_view line) {
  std::string s = strip(line);
  auto fail = [&](const std::string& why) {
    return std::invalid_argument(why + " in '" + std::string(line) + "'");
  };
  auto eq = s.find("==");
  if (eq == std::string::npos) throw fail("missing '=='");
  std::string lhs = s.substr(0, eq), rhs = s.substr(eq + 2);

  CorpusIdentity id;
  if (lhs.size() < 4 || lhs[1] != '(' || lhs.back() != ')') throw fail("malformed left-hand side");
  std::string inner = lhs.substr(2, lhs.size() - 3);
  std::vector<std::string> parts;
  if (lhs[0] == 'T') {
    id.op = Op::Triple;
    std::stringstream ss(inner);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    if (parts.size() != 3) throw fail("T takes three operands");
  } else if (lhs[0] == 'U') {
    id.op = Op::Quadratic;
    auto semi = inner.find(';');
    if (semi == std::string::npos) throw fail("U takes 'x; y'");
    parts = {inner.substr(0, semi), inner.substr(semi + 1)};
  } else {
    throw fail("unknown operator");
  }
  try {
    for (const auto& p : parts) id.args.push_back(parse_operand(p));
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }

  std::string term = rhs;
  auto star = rhs.find('*');
  if (star != std::string::npos) {
    const char* first = rhs.data();
    const char* last = rhs.data() + star;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, id.coeff);
    if (ec != std::errc() || ptr != last) throw fail("bad coefficient");
    term = rhs.substr(star + 1);
  } else if (!term.empty() && (term[0] == '-' || term[0] == '+')) {
    id.coeff = term[0] == '-' ? -1 : 1;
    term = term.substr(1);
  }
  try {
    id.rhs = parse_operand(term);
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  return id;
}

AlbertElement CorpusIdentity::lhs_value(const FieldSpec& field) const {
  if (op == Op::Triple) {
    return triple(args[0].value(field), args[1].value(field), args[2].value(field));
  }
  return u_op(args[0].value(field), args[1].value(field));
}

AlbertElement CorpusIdentity::rhs_value(const FieldSpec& field) const {
  return Scalar(field, coeff) * rhs.value(field);
}

bool CorpusReport::all_pass() const { return failures() == 0 && !results.empty(); }

std::size_t CorpusReport::failures() const {
  return std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
}

std::string_view default_identity_corpus() { return embedded::identity_corpus_text(); }

CorpusReport paper_identity_corpus(const FieldSpec& field, std::string_view text) {
  CorpusReport report{field, {}};
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    IdentityResult r{lineno, line, false, ""};
    try {
      auto id = CorpusIdentity::parse(line);
      auto got = id.lhs_value(field);
      r.pass = got == id.rhs_value(field);
      if (!r.pass) r.detail = "left-hand side is " + describe(got);
    } catch (const std::invalid_argument& e) {
      r.detail = std::string("parse error: ") + e.what();
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace f4
