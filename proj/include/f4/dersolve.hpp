#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f4/albert.hpp"

namespace f4 {

inline constexpr int kUnknowns = kAlbertDim * kAlbertDim;  // 729

/// Column of the unknown "coordinate `slot` of D(b)": basis-element-major,
/// slot-minor, both 0-based.
constexpr int unknown_index(int basis, int slot) { return basis * kAlbertDim + slot; }
inline int unknown_index(BasisElement b, int slot) { return unknown_index(b.index(), slot); }

/// A 27x27 matrix M acting on Coord27 column vectors: M(s, k) is coordinate s
/// of D(basis element k).
class DerivationMatrix {
 public:
  DerivationMatrix() = default;
  static DerivationMatrix zero(const FieldSpec& field);
  static DerivationMatrix identity(const FieldSpec& field);
  /// From a 729-vector in unknown_index order.
  static DerivationMatrix from_unknowns(const FieldSpec& field, const std::vector<Scalar>& x);

  const FieldSpec& field() const { return field_; }
  const Scalar& operator()(int s, int k) const { return m_[s * kAlbertDim + k]; }
  Scalar& operator()(int s, int k) { return m_[s * kAlbertDim + k]; }

  std::vector<Scalar> unknowns() const;
  Coord27 apply(const Coord27& c) const;
  AlbertElement apply(const AlbertElement& x) const;
  DerivationMatrix transpose() const;
  bool is_zero() const;

  friend DerivationMatrix operator+(const DerivationMatrix& a, const DerivationMatrix& b);
  friend DerivationMatrix operator-(const DerivationMatrix& a, const DerivationMatrix& b);
  friend DerivationMatrix operator*(const Scalar& k, const DerivationMatrix& a);
  /// Matrix product.
  friend DerivationMatrix operator*(const DerivationMatrix& a, const DerivationMatrix& b);
  friend bool operator==(const DerivationMatrix& a, const DerivationMatrix& b);

 private:
  FieldSpec field_;
  std::vector<Scalar> m_;
};

struct DerivationBasis {
  FieldSpec field;
  std::vector<DerivationMatrix> members;

  std::size_t size() const { return members.size(); }
};

/// Which family a constraint row comes from.  Indices are 0-based basis
/// indices; `coord` is the output coordinate the row constrains.
struct RowTag {
  enum class Kind : std::uint8_t { Unit, Quadratic, Bilinear };
  Kind kind;
  std::uint8_t i = 0, j = 0, y = 0, coord = 0;

  std::string describe() const;
};

/// The homogeneous linear system whose solutions are the derivations.
///
/// Unit rows:      D(E1) + D(E2) + D(E3) = 0.
/// Quadratic rows: D(U_b y) - T(Db, y, b) - U_b(Dy) = 0 for basis b, y.
/// Bilinear rows:  D(T(bi,y,bj)) - T(Dbi,y,bj) - T(bi,Dy,bj) - T(bi,y,Dbj) = 0
///                 for basis bi < bj and y.
///
/// Coefficients are stored as the small integers they are over Z; the row's
/// coefficient in the field is their image.  Entries that vanish in the
/// field are dropped.
class ConstraintSystem {
 public:
  struct Entry {
    std::int32_t col;
    std::int64_t coeff;
  };

  const FieldSpec& field() const { return field_; }
  std::size_t num_rows() const { return tags_.size(); }
  int num_cols() const { return kUnknowns; }
  std::size_t num_entries() const { return entries_.size(); }

  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + offsets_[r], entries_.data() + offsets_[r + 1]};
  }
  const RowTag& tag(std::size_t r) const { return tags_[r]; }
  std::vector<std::pair<int, Scalar>> row_scalars(std::size_t r) const;

  /// `row col value` triplets, 1-indexed, after a `rows cols entries` header.
  void write_matrix_market(std::ostream& os) const;

 private:
  friend ConstraintSystem assemble_constraints(const FieldSpec& field);

  FieldSpec field_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
  std::vector<RowTag> tags_;
};

ConstraintSystem assemble_constraints(const FieldSpec& field);

struct NullspaceOptions {
  enum class Strategy {
    Direct,         // eliminate every row in the field
    ModularSelect,  // rationals only, see solve_nullspace
  };
  Strategy strategy = Strategy::Direct;
  /// Skip rows proportional (over the field) to a row already seen.
  bool dedup = true;
};

struct NullspaceResult {
  DerivationBasis basis;
  std::vector<int> pivot_columns;
  std::size_t rows_eliminated = 0;  // rows actually fed to the exact elimination
  std::size_t distinct_rows = 0;    // after deduplication
};

/// Exact nullspace, one basis vector per free column of the RREF (smallest
/// free column first; 1 there and 0 at the other free columns).
///
/// ModularSelect: a pass over GF(2^61-1) picks rows spanning the row space
/// mod that prime, the exact elimination runs on those rows only, and every
/// row of the full system is then checked exactly against the candidate
/// kernel; rows that fail are added and the exact step repeated.  The
/// resulting kernel is therefore the kernel of the full system.
NullspaceResult solve_nullspace(const ConstraintSystem& sys, const NullspaceOptions& opts = {});
DerivationBasis nullspace(const ConstraintSystem& sys);

/// Index of the first row D violates, if any.
std::optional<std::size_t> first_violated_row(const DerivationMatrix& d, const ConstraintSystem& sys);
bool is_derivation(const DerivationMatrix& d, const ConstraintSystem& sys);

/// Rank of the members as 729-vectors.
int basis_rank(const DerivationBasis& b);

}  // namespace f4
