#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f4/dersolve.hpp"

namespace f4 {

inline constexpr int kNumParams = 52;

/// Values for the 52 free parameters, in the order of parameter_names().
using ParamVector = std::vector<Scalar>;

/// The explicit generic derivation: each basis image as an integer
/// combination of the free parameters.
class GeneratorTable {
 public:
  struct Term {
    int slot;   // 0-based Coord27 slot
    int param;  // index into params()
    long long coeff;
  };
  /// A coordinate whose pre-elimination value was coeff * phi3 exactly.
  struct Phi3Site {
    BasisElement basis;
    int slot;  // 0-based
    long long coeff;
  };

  /// Throws std::runtime_error on malformed input or unknown names.
  static GeneratorTable from_json(std::string_view text);
  /// The table compiled into the library.
  static const GeneratorTable& builtin();

  const std::vector<std::string>& params() const { return params_; }
  int param_index(std::string_view name) const;
  const std::vector<Term>& image(BasisElement b) const { return images_[b.index()]; }
  /// phi3 as (parameter index, coefficient) pairs.
  const std::vector<std::pair<int, long long>>& phi3_combination() const { return phi3_; }
  const std::vector<Phi3Site>& phi3_sites() const { return sites_; }
  const std::vector<std::string>& reconstructed_entries() const { return reconstructed_; }

 private:
  std::vector<std::string> params_;
  std::array<std::vector<Term>, kAlbertDim> images_;
  std::vector<std::pair<int, long long>> phi3_;
  std::vector<Phi3Site> sites_;
  std::vector<std::string> reconstructed_;
};

const std::vector<std::string>& parameter_names();

/// The eliminated parameter: 2 xi + delta1 - epsilon2 - eta1.
Scalar phi3(const ParamVector& p);

/// Column k is coor of the image of basis element k at parameters p.
DerivationMatrix generic_derivation(const ParamVector& p, const GeneratorTable& table = GeneratorTable::builtin());

/// generic_derivation at the 52 unit parameter vectors, in parameter order.
DerivationBasis paper_generators(const FieldSpec& field, const GeneratorTable& table = GeneratorTable::builtin());

/// Mutual containment of the spans, as 729-vectors.
bool span_equals(const DerivationBasis& a, const DerivationBasis& b);

/// Coefficients of d in `basis` (which must be independent), or nullopt if d
/// is outside the span.
std::optional<std::vector<Scalar>> express_in_basis(const DerivationBasis& basis, const DerivationMatrix& d);

/// The parameter vector p with generic_derivation(p) == d, if any.
std::optional<ParamVector> express_in_params(const DerivationMatrix& d);

/// The row tuple `row` multiplied on the right by `supermatrix` (the
/// transpose of a DerivationMatrix acts this way).
Coord27 row_times(const Coord27& row, const DerivationMatrix& supermatrix);

/// The phi3 relation as recovered from an arbitrary basis of the derivation
/// space.  Each member is written in the parameters; the coordinate at every
/// phi3 site (divided by the site coefficient) is then a linear form in the
/// parameters, solved for from the members.
struct Phi3Recovery {
  std::vector<Scalar> recovered;  // one coefficient per parameter
  std::vector<Scalar> expected;   // the stored phi3 combination, in the field
  bool sites_agree = false;       // all sites give the same form

  bool matches() const { return sites_agree && recovered == expected; }
};

/// Throws std::invalid_argument if the basis does not have the span of the
/// tabulated generators.
Phi3Recovery recover_phi3(const DerivationBasis& basis);

/// Text rendering of a linear form, e.g. "2 xi + delta1 - epsilon2 - eta1".
std::string format_linear(const std::vector<std::pair<int, Scalar>>& terms, const std::vector<std::string>& names);

/// Human-readable listing of every basis image as a 3x3 block matrix over
/// the octonions, entries written in the parameter names.  Lower entries are
/// printed as the conjugates of the upper ones.
std::string symbolic_generic_table(const FieldSpec& field, const GeneratorTable& table = GeneratorTable::builtin());

}  // namespace f4
