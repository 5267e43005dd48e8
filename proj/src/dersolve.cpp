#include "f4/dersolve.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "f4/field_ops.hpp"
#include "f4/linalg.hpp"

namespace f4 {

// ---------------------------------------------------------------------------
// DerivationMatrix

DerivationMatrix DerivationMatrix::zero(const FieldSpec& field) {
  DerivationMatrix d;
  d.field_ = field;
  d.m_.assign(kUnknowns, Scalar::zero(field));
  return d;
}

DerivationMatrix DerivationMatrix::identity(const FieldSpec& field) {
  DerivationMatrix d = zero(field);
  for (int i = 0; i < kAlbertDim; ++i) d(i, i) = Scalar::one(field);
  return d;
}

DerivationMatrix DerivationMatrix::from_unknowns(const FieldSpec& field, const std::vector<Scalar>& x) {
  if (x.size() != static_cast<std::size_t>(kUnknowns)) throw std::invalid_argument("expected 729 unknowns");
  DerivationMatrix d = zero(field);
  for (int k = 0; k < kAlbertDim; ++k) {
    for (int s = 0; s < kAlbertDim; ++s) d(s, k) = x[unknown_index(k, s)];
  }
  return d;
}

std::vector<Scalar> DerivationMatrix::unknowns() const {
  std::vector<Scalar> x(kUnknowns);
  for (int k = 0; k < kAlbertDim; ++k) {
    for (int s = 0; s < kAlbertDim; ++s) x[unknown_index(k, s)] = (*this)(s, k);
  }
  return x;
}

Coord27 DerivationMatrix::apply(const Coord27& c) const {
  Coord27 out;
  for (int s = 0; s < kAlbertDim; ++s) {
    Scalar acc = Scalar::zero(field_);
    for (int k = 0; k < kAlbertDim; ++k) {
      if (!c[k].is_zero()) acc += (*this)(s, k) * c[k];
    }
    out[s] = acc;
  }
  return out;
}

AlbertElement DerivationMatrix::apply(const AlbertElement& x) const { return invcoor(apply(coor(x))); }

DerivationMatrix DerivationMatrix::transpose() const {
  DerivationMatrix t = zero(field_);
  for (int s = 0; s < kAlbertDim; ++s) {
    for (int k = 0; k < kAlbertDim; ++k) t(k, s) = (*this)(s, k);
  }
  return t;
}

bool DerivationMatrix::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Scalar& s) { return s.is_zero(); });
}

DerivationMatrix operator+(const DerivationMatrix& a, const DerivationMatrix& b) {
  DerivationMatrix r = a;
  for (int i = 0; i < kUnknowns; ++i) r.m_[i] += b.m_[i];
  return r;
}

DerivationMatrix operator-(const DerivationMatrix& a, const DerivationMatrix& b) {
  DerivationMatrix r = a;
  for (int i = 0; i < kUnknowns; ++i) r.m_[i] -= b.m_[i];
  return r;
}

DerivationMatrix operator*(const Scalar& k, const DerivationMatrix& a) {
  DerivationMatrix r = a;
  for (auto& x : r.m_) x = k * x;
  return r;
}

DerivationMatrix operator*(const DerivationMatrix& a, const DerivationMatrix& b) {
  return dispatch_field(a.field_, [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    constexpr int n = kAlbertDim;
    std::vector<T> x(n * n), y(n * n), z(n * n, ops.zero());
    for (int i = 0; i < n * n; ++i) {
      x[i] = ops.from_scalar(a.m_[i]);
      y[i] = ops.from_scalar(b.m_[i]);
    }
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (ops.is_zero(x[i * n + k])) continue;
        T f = ops.neg(x[i * n + k]);
        for (int j = 0; j < n; ++j) {
          if (!ops.is_zero(y[k * n + j])) ops.sub_mul(z[i * n + j], f, y[k * n + j]);
        }
      }
    }
    DerivationMatrix r = DerivationMatrix::zero(a.field_);
    for (int i = 0; i < n * n; ++i) r.m_[i] = ops.to_scalar(z[i]);
    return r;
  });
}

bool operator==(const DerivationMatrix& a, const DerivationMatrix& b) {
  return a.field_ == b.field_ && a.m_ == b.m_;
}

// ---------------------------------------------------------------------------
// Constraint assembly

std::string RowTag::describe() const {
  auto nm = [](int i) { return BasisElement::from_index(i).name(); };
  std::string c = "coord " + std::to_string(coord + 1);
  switch (kind) {
    case Kind::Unit: return "unit, " + c;
    case Kind::Quadratic: return "quadratic(b=" + nm(i) + ", y=" + nm(y) + "), " + c;
    default: return "bilinear(" + nm(i) + ", " + nm(j) + ", y=" + nm(y) + "), " + c;
  }
}

std::vector<std::pair<int, Scalar>> ConstraintSystem::row_scalars(std::size_t r) const {
  std::vector<std::pair<int, Scalar>> out;
  for (const auto& e : row(r)) out.emplace_back(e.col, Scalar(field_, static_cast<long long>(e.coeff)));
  return out;
}

void ConstraintSystem::write_matrix_market(std::ostream& os) const {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << "% field " << field_.name() << "; column = 27*basis + slot + 1\n";
  os << num_rows() << ' ' << num_cols() << ' ' << num_entries() << '\n';
  for (std::size_t r = 0; r < num_rows(); ++r) {
    for (const auto& e : row(r)) os << r + 1 << ' ' << e.col + 1 << ' ' << e.coeff << '\n';
  }
}

namespace {

// Dense accumulator for one row, flushed into the CSR arrays.
class RowBuilder {
 public:
  explicit RowBuilder(const FieldSpec& field) : acc_(kUnknowns, 0), mark_(kUnknowns, 0), field_(field) {}

  void add(int col, std::int64_t v) {
    if (v == 0) return;
    if (!mark_[col]) {
      mark_[col] = 1;
      touched_.push_back(col);
    }
    acc_[col] += v;
  }

  void flush(std::vector<ConstraintSystem::Entry>& entries) {
    std::sort(touched_.begin(), touched_.end());
    for (int c : touched_) {
      if (!vanishes(acc_[c])) entries.push_back({c, acc_[c]});
      acc_[c] = 0;
      mark_[c] = 0;
    }
    touched_.clear();
  }

 private:
  bool vanishes(std::int64_t v) const {
    if (v == 0) return true;
    if (field_.is_rational() || !field_.word_sized()) return false;
    return detail::reduce_int(v, field_.word_modulus()) == 0;
  }

  std::vector<std::int64_t> acc_;
  std::vector<char> mark_;
  std::vector<int> touched_;
  FieldSpec field_;
};

}  // namespace

ConstraintSystem assemble_constraints(const FieldSpec& field) {
  const auto& st = StructureTensors::get();
  constexpr int n = kAlbertDim;
  ConstraintSystem sys;
  sys.field_ = field;
  sys.entries_.reserve(8'000'000);
  sys.tags_.reserve(n + n * n * n + n * (n - 1) / 2 * n * n);
  RowBuilder rb(field);

  auto emit = [&](RowTag tag) {
    rb.flush(sys.entries_);
    sys.offsets_.push_back(sys.entries_.size());
    sys.tags_.push_back(tag);
  };
  auto u8 = [](int v) { return static_cast<std::uint8_t>(v); };

  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < 3; ++k) rb.add(unknown_index(k, r), 1);
    emit({RowTag::Kind::Unit, 0, 0, 0, u8(r)});
  }

  for (int b = 0; b < n; ++b) {
    for (int y = 0; y < n; ++y) {
      for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) rb.add(unknown_index(k, r), st.u(b, y, k));
        for (int s = 0; s < n; ++s) {
          rb.add(unknown_index(b, s), -st.t(s, y, b, r));
          rb.add(unknown_index(y, s), -st.u(b, s, r));
        }
        emit({RowTag::Kind::Quadratic, u8(b), u8(b), u8(y), u8(r)});
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int y = 0; y < n; ++y) {
        for (int r = 0; r < n; ++r) {
          for (int k = 0; k < n; ++k) rb.add(unknown_index(k, r), st.t(i, y, j, k));
          for (int s = 0; s < n; ++s) {
            rb.add(unknown_index(i, s), -st.t(s, y, j, r));
            rb.add(unknown_index(y, s), -st.t(i, s, j, r));
            rb.add(unknown_index(j, s), -st.t(i, y, s, r));
          }
          emit({RowTag::Kind::Bilinear, u8(i), u8(j), u8(y), u8(r)});
        }
      }
    }
  }
  sys.entries_.shrink_to_fit();
  return sys;
}

// ---------------------------------------------------------------------------
// Row checks

namespace {

// Rationals are checked on integer multiples of the vectors (denominators
// cleared), with 128-bit accumulation when every entry fits in 64 bits.
std::optional<std::size_t> first_violation_rational(const ConstraintSystem& sys,
                                                    const std::vector<std::vector<mpq_class>>& vecs) {
  std::vector<std::vector<mpz_class>> ints;
  bool fits = true;
  for (const auto& v : vecs) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> w(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
      w[c] = v[c].get_num() * (l / v[c].get_den());
      fits = fits && w[c].fits_slong_p();
    }
    ints.push_back(std::move(w));
  }
  if (fits) {
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& w : ints) {
      std::vector<std::int64_t> s(w.size());
      for (std::size_t c = 0; c < w.size(); ++c) s[c] = w[c].get_si();
      small.push_back(std::move(s));
    }
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
      auto row = sys.row(r);
      for (const auto& s : small) {
        __int128 acc = 0;
        for (const auto& e : row) acc += static_cast<__int128>(e.coeff) * s[e.col];
        if (acc != 0) return r;
      }
    }
    return std::nullopt;
  }
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    auto row = sys.row(r);
    for (const auto& w : ints) {
      mpz_class acc = 0;
      for (const auto& e : row) acc += mpz_class(static_cast<long>(e.coeff)) * w[e.col];
      if (sgn(acc) != 0) return r;
    }
  }
  return std::nullopt;
}

template <class Ops>
std::optional<std::size_t> first_violation(const Ops& ops, const ConstraintSystem& sys,
                                           const std::vector<std::vector<typename Ops::T>>& vecs) {
  if constexpr (std::is_same_v<Ops, RationalOps>) {
    return first_violation_rational(sys, vecs);
  } else {
    for (std::size_t r = 0; r < sys.num_rows(); ++r) {
      auto row = sys.row(r);
      for (const auto& v : vecs) {
        typename Ops::T acc = ops.zero();
        for (const auto& e : row) ops.sub_mul(acc, ops.from_int(e.coeff), v[e.col]);
        if (!ops.is_zero(acc)) return r;
      }
    }
    return std::nullopt;
  }
}

template <class Ops>
std::vector<typename Ops::T> to_ops(const Ops& ops, const std::vector<Scalar>& x) {
  std::vector<typename Ops::T> out;
  out.reserve(x.size());
  for (const auto& s : x) out.push_back(ops.from_scalar(s));
  return out;
}

// Key identifying a row up to a nonzero scalar factor in the field.
struct RowKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : k) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class RowDeduper {
 public:
  explicit RowDeduper(const FieldSpec& field) : field_(field) {}

  /// False if the row is proportional to one seen before (or is empty).
  bool fresh(std::span<const ConstraintSystem::Entry> row) {
    if (row.empty()) return false;
    if (!field_.is_rational() && !field_.word_sized()) return true;
    std::vector<std::uint64_t> key;
    key.reserve(2 * row.size());
    if (field_.is_rational()) {
      std::int64_t g = 0;
      for (const auto& e : row) g = std::gcd(g, e.coeff);
      if (row.front().coeff < 0) g = -g;
      for (const auto& e : row) {
        key.push_back(static_cast<std::uint64_t>(e.col));
        key.push_back(static_cast<std::uint64_t>(e.coeff / g));
      }
    } else {
      std::uint64_t p = field_.word_modulus();
      std::uint64_t s = detail::inv_mod(detail::reduce_int(row.front().coeff, p), p);
      for (const auto& e : row) {
        key.push_back(static_cast<std::uint64_t>(e.col));
        key.push_back(detail::mul_mod(s, detail::reduce_int(e.coeff, p), p));
      }
    }
    return seen_.insert(std::move(key)).second;
  }

  std::size_t count() const { return seen_.size(); }

 private:
  FieldSpec field_;
  std::unordered_set<std::vector<std::uint64_t>, RowKeyHash> seen_;
};

template <class Ops>
typename RowReducer<Ops>::SparseRow sparse_row(const Ops& ops, std::span<const ConstraintSystem::Entry> row) {
  typename RowReducer<Ops>::SparseRow out;
  out.reserve(row.size());
  for (const auto& e : row) out.emplace_back(e.col, ops.from_int(e.coeff));
  return out;
}

template <class Ops>
NullspaceResult finish(const Ops& ops, const RowReducer<Ops>& red) {
  NullspaceResult res;
  res.basis.field = ops.field;
  res.pivot_columns = red.pivot_columns();
  for (const auto& v : red.nullspace()) {
    std::vector<Scalar> x;
    x.reserve(v.size());
    for (const auto& t : v) x.push_back(ops.to_scalar(t));
    res.basis.members.push_back(DerivationMatrix::from_unknowns(ops.field, x));
  }
  return res;
}

template <class Ops>
NullspaceResult solve_direct(const Ops& ops, const ConstraintSystem& sys, bool dedup) {
  RowReducer<Ops> red(ops, kUnknowns);
  RowDeduper seen(ops.field);
  std::size_t fed = 0;
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    auto row = sys.row(r);
    if (row.empty() || (dedup && !seen.fresh(row))) continue;
    red.insert(sparse_row(ops, row));
    ++fed;
  }
  NullspaceResult res = finish(ops, red);
  res.rows_eliminated = fed;
  res.distinct_rows = dedup ? seen.count() : fed;
  return res;
}

NullspaceResult solve_modular_select(const ConstraintSystem& sys, bool dedup) {
  const FieldSpec aux = FieldSpec::prime(std::uint64_t{2305843009213693951ull});  // 2^61 - 1
  WordPrimeOps wops(aux);
  RowReducer<WordPrimeOps> modp(wops, kUnknowns);
  RowDeduper seen(sys.field());
  std::vector<std::size_t> selected;
  for (std::size_t r = 0; r < sys.num_rows(); ++r) {
    auto row = sys.row(r);
    if (row.empty() || (dedup && !seen.fresh(row))) continue;
    if (modp.insert(sparse_row(wops, row))) selected.push_back(r);
  }

  RationalOps qops(sys.field());
  RowReducer<RationalOps> exact(qops, kUnknowns);
  for (auto r : selected) exact.insert(sparse_row(qops, sys.row(r)));
  std::size_t fed = selected.size();
  while (auto bad = first_violation(qops, sys, exact.nullspace())) {
    exact.insert(sparse_row(qops, sys.row(*bad)));
    ++fed;
  }
  NullspaceResult res = finish(qops, exact);
  res.rows_eliminated = fed;
  res.distinct_rows = dedup ? seen.count() : sys.num_rows();
  return res;
}

}  // namespace

NullspaceResult solve_nullspace(const ConstraintSystem& sys, const NullspaceOptions& opts) {
  using S = NullspaceOptions::Strategy;
  if (opts.strategy == S::ModularSelect) {
    if (!sys.field().is_rational()) throw std::invalid_argument("modular row selection applies to Q only");
    return solve_modular_select(sys, opts.dedup);
  }
  return dispatch_field(sys.field(), [&](const auto& ops) { return solve_direct(ops, sys, opts.dedup); });
}

DerivationBasis nullspace(const ConstraintSystem& sys) { return solve_nullspace(sys).basis; }

std::optional<std::size_t> first_violated_row(const DerivationMatrix& d, const ConstraintSystem& sys) {
  if (!(d.field() == sys.field())) throw FieldMismatch("matrix and constraint system over different fields");
  return dispatch_field(sys.field(), [&](const auto& ops) {
    return first_violation(ops, sys, {to_ops(ops, d.unknowns())});
  });
}

bool is_derivation(const DerivationMatrix& d, const ConstraintSystem& sys) {
  return !first_violated_row(d, sys).has_value();
}

int basis_rank(const DerivationBasis& b) {
  return dispatch_field(b.field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    std::vector<std::vector<typename Ops::T>> rows;
    for (const auto& m : b.members) rows.push_back(to_ops(ops, m.unknowns()));
    return matrix_rank(ops, rows, kUnknowns);
  });
}

}  // namespace f4
