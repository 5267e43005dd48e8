#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "f4/albert.hpp"

namespace f4 {

/// An operand in the identity grammar: a basis element, ONE or ZERO.
struct CorpusOperand {
  enum class Kind { Basis, One, Zero };
  Kind kind = Kind::Zero;
  BasisElement basis = BasisElement::E(1);

  AlbertElement value(const FieldSpec& field) const;
  std::string name() const;
};

/// One line of the corpus, e.g. `T(X1[e3],X1[e5],X1[e6]) == X1[e5]` or
/// `U(X1[e6]; X1[e3]) == -1*X1[e6]`.
struct CorpusIdentity {
  enum class Op { Triple, Quadratic };
  Op op = Op::Triple;
  std::vector<CorpusOperand> args;  // 3 for T, 2 for U
  long long coeff = 1;
  CorpusOperand rhs;

  /// Throws std::invalid_argument on malformed input.
  static CorpusIdentity parse(std::string_view line);

  AlbertElement lhs_value(const FieldSpec& field) const;
  AlbertElement rhs_value(const FieldSpec& field) const;
};

struct IdentityResult {
  int line = 0;  // 1-based line in the source text
  std::string text;
  bool pass = false;
  std::string detail;  // parse error or the computed left-hand side on failure
};

struct CorpusReport {
  FieldSpec field;
  std::vector<IdentityResult> results;

  bool all_pass() const;
  std::size_t failures() const;
};

/// The corpus shipped with the library.
std::string_view default_identity_corpus();

/// Evaluates every identity in `text` (blank lines and '#' comments are
/// skipped).  Lines that do not parse are reported as failures.
CorpusReport paper_identity_corpus(const FieldSpec& field,
                                   std::string_view text = default_identity_corpus());

}  // namespace f4
