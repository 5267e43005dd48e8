#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f4/dersolve.hpp"

namespace f4 {

/// Commutator A B - B A.
DerivationMatrix bracket(const DerivationMatrix& a, const DerivationMatrix& b);

/// trace(A B) on the 27-dimensional module.  Not the Killing form.
Scalar trace_form_27(const DerivationMatrix& a, const DerivationMatrix& b);

/// A bracket that is not in the span of the basis.
class NonClosureError : public std::runtime_error {
 public:
  NonClosureError(int i, int j)
      : std::runtime_error("bracket of basis members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " lies outside their span"),
        i(i), j(j) {}
  int i, j;  // 0-based
};

/// [D_i, D_j] = sum_k c(i,j,k) D_k, stored for i < j; zeros omitted.
class StructureConstants {
 public:
  struct Entry {
    int i, j, k;  // 0-based, i < j
    Scalar value;
  };

  StructureConstants(FieldSpec field, int dim, std::string basis_name, std::vector<Entry> entries);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const std::string& basis_name() const { return basis_name_; }
  /// Lexicographic in (i, j, k).
  const std::vector<Entry>& entries() const { return entries_; }

  /// c(i,j,k) for any i, j, using antisymmetry.
  Scalar at(int i, int j, int k) const;

  /// Bracket of two coefficient vectors.
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

 private:
  FieldSpec field_;
  int dim_;
  std::string basis_name_;
  std::vector<Entry> entries_;
  std::vector<Scalar> dense_;  // dim^3, c(i,j,k) at (i*dim + j)*dim + k
};

/// Solves every bracket [D_i, D_j], i < j, in the basis.  Throws
/// NonClosureError naming the first pair whose bracket falls outside the
/// span, and std::invalid_argument if the members are dependent.
StructureConstants structure_constants(const DerivationBasis& basis, const std::string& basis_name = "paper");

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::optional<std::array<int, 3>> first_failure;  // 0-based i < j < k

  bool ok() const { return !first_failure.has_value(); }
};

/// Checks sum over cyclic (i,j,k) of [[D_i, D_j], D_k] = 0 from the
/// structure constants, for every i < j < k.
JacobiReport jacobi_check(const StructureConstants& sc);

using KillingGram = std::vector<std::vector<Scalar>>;

/// kappa(i,j) = sum_{k,l} c(i,k,l) c(j,l,k) = trace(ad D_i ad D_j).
KillingGram killing(const StructureConstants& sc);
int killing_rank(const KillingGram& g);
/// x^T G y for coefficient vectors.
Scalar killing_value(const KillingGram& g, const std::vector<Scalar>& x, const std::vector<Scalar>& y);

}  // namespace f4
