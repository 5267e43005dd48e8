#include "f4/lie.hpp"

#include <algorithm>

#include "f4/field_ops.hpp"
#include "f4/linalg.hpp"

namespace f4 {

DerivationMatrix bracket(const DerivationMatrix& a, const DerivationMatrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("bracket over different fields");
  return a * b - b * a;
}

Scalar trace_form_27(const DerivationMatrix& a, const DerivationMatrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("trace form over different fields");
  Scalar acc = Scalar::zero(a.field());
  for (int i = 0; i < kAlbertDim; ++i) {
    for (int k = 0; k < kAlbertDim; ++k) acc += a(i, k) * b(k, i);
  }
  return acc;
}

StructureConstants::StructureConstants(FieldSpec field, int dim, std::string basis_name, std::vector<Entry> entries)
    : field_(std::move(field)), dim_(dim), basis_name_(std::move(basis_name)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  dense_.assign(static_cast<std::size_t>(dim_) * dim_ * dim_, Scalar::zero(field_));
  for (const auto& e : entries_) {
    if (e.i >= e.j) throw std::invalid_argument("structure constants must be stored with i < j");
    dense_[(e.i * dim_ + e.j) * dim_ + e.k] = e.value;
    dense_[(e.j * dim_ + e.i) * dim_ + e.k] = -e.value;
  }
}

Scalar StructureConstants::at(int i, int j, int k) const { return dense_[(i * dim_ + j) * dim_ + k]; }

std::vector<Scalar> StructureConstants::bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (const auto& e : entries_) {
    Scalar w = x[e.i] * y[e.j] - x[e.j] * y[e.i];
    if (!w.is_zero()) out[e.k] += w * e.value;
  }
  return out;
}

namespace {

template <class Ops>
using Mat = std::vector<typename Ops::T>;

template <class Ops>
Mat<Ops> to_mat(const Ops& ops, const DerivationMatrix& d) {
  Mat<Ops> m(kUnknowns);
  for (int s = 0; s < kAlbertDim; ++s) {
    for (int k = 0; k < kAlbertDim; ++k) m[s * kAlbertDim + k] = ops.from_scalar(d(s, k));
  }
  return m;
}

// A B - B A in unknown_index order (column-major in the matrix sense).
template <class Ops>
std::vector<typename Ops::T> commutator_unknowns(const Ops& ops, const Mat<Ops>& a, const Mat<Ops>& b) {
  constexpr int n = kAlbertDim;
  std::vector<typename Ops::T> out(kUnknowns, ops.zero());
  for (int s = 0; s < n; ++s) {
    for (int m = 0; m < n; ++m) {
      const auto& as = a[s * n + m];
      const auto& bs = b[s * n + m];
      bool za = ops.is_zero(as), zb = ops.is_zero(bs);
      if (za && zb) continue;
      for (int k = 0; k < n; ++k) {
        auto& o = out[unknown_index(k, s)];
        if (!za && !ops.is_zero(b[m * n + k])) ops.sub_mul(o, ops.neg(as), b[m * n + k]);
        if (!zb && !ops.is_zero(a[m * n + k])) ops.sub_mul(o, bs, a[m * n + k]);
      }
    }
  }
  return out;
}

}  // namespace

StructureConstants structure_constants(const DerivationBasis& basis, const std::string& basis_name) {
  const int dim = static_cast<int>(basis.size());
  auto entries = dispatch_field(basis.field, [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    std::vector<Mat<Ops>> mats;
    std::vector<std::vector<typename Ops::T>> rows;
    for (const auto& d : basis.members) {
      mats.push_back(to_mat(ops, d));
      std::vector<typename Ops::T> row;
      for (const auto& s : d.unknowns()) row.push_back(ops.from_scalar(s));
      rows.push_back(std::move(row));
    }
    SpanSolver<Ops> solver(ops, rows, kUnknowns);
    if (solver.rank() != dim) throw std::invalid_argument("basis members are linearly dependent");
    std::vector<StructureConstants::Entry> out;
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        auto q = solver.coefficients(commutator_unknowns(ops, mats[i], mats[j]));
        if (!q) throw NonClosureError(i, j);
        for (int k = 0; k < dim; ++k) {
          if (!ops.is_zero((*q)[k])) out.push_back({i, j, k, ops.to_scalar((*q)[k])});
        }
      }
    }
    return out;
  });
  return StructureConstants(basis.field, dim, basis_name, std::move(entries));
}

namespace {

template <class Ops>
std::vector<typename Ops::T> dense_tensor(const Ops& ops, const StructureConstants& sc) {
  const int n = sc.dim();
  std::vector<typename Ops::T> c(static_cast<std::size_t>(n) * n * n, ops.zero());
  for (const auto& e : sc.entries()) {
    c[(e.i * n + e.j) * n + e.k] = ops.from_scalar(e.value);
    c[(e.j * n + e.i) * n + e.k] = ops.neg(ops.from_scalar(e.value));
  }
  return c;
}

}  // namespace

JacobiReport jacobi_check(const StructureConstants& sc) {
  return dispatch_field(sc.field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const int n = sc.dim();
    auto c = dense_tensor(ops, sc);
    // nonzero k for each (i,j), to skip the empty bulk of the tensor
    std::vector<std::vector<int>> support(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (!ops.is_zero(c[(i * n + j) * n + k])) support[i * n + j].push_back(k);
        }
      }
    }
    JacobiReport rep;
    std::vector<T> acc(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          std::fill(acc.begin(), acc.end(), ops.zero());
          // [[x,y],z] + [[y,z],x] + [[z,x],y]
          const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& t : cyc) {
            for (int m : support[t[0] * n + t[1]]) {
              T f = ops.neg(c[(t[0] * n + t[1]) * n + m]);
              for (int l : support[m * n + t[2]]) ops.sub_mul(acc[l], f, c[(m * n + t[2]) * n + l]);
            }
          }
          ++rep.triples_checked;
          bool zero = std::all_of(acc.begin(), acc.end(), [&](const T& x) { return ops.is_zero(x); });
          if (!zero && !rep.first_failure) rep.first_failure = std::array<int, 3>{i, j, k};
        }
      }
    }
    return rep;
  });
}

KillingGram killing(const StructureConstants& sc) {
  return dispatch_field(sc.field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    const int n = sc.dim();
    auto c = dense_tensor(ops, sc);
    KillingGram g(n, std::vector<Scalar>(n, Scalar::zero(sc.field())));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T acc = ops.zero();
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < n; ++l) {
            const T& x = c[(i * n + k) * n + l];
            if (ops.is_zero(x)) continue;
            const T& y = c[(j * n + l) * n + k];
            if (!ops.is_zero(y)) ops.sub_mul(acc, ops.neg(x), y);
          }
        }
        g[i][j] = g[j][i] = ops.to_scalar(acc);
      }
    }
    return g;
  });
}

int killing_rank(const KillingGram& g) {
  if (g.empty()) return 0;
  const int n = static_cast<int>(g.size());
  return dispatch_field(g[0][0].field(), [&](const auto& ops) {
    using T = typename std::decay_t<decltype(ops)>::T;
    std::vector<std::vector<T>> rows;
    for (const auto& r : g) {
      std::vector<T> row;
      for (const auto& s : r) row.push_back(ops.from_scalar(s));
      rows.push_back(std::move(row));
    }
    return matrix_rank(ops, rows, n);
  });
}

Scalar killing_value(const KillingGram& g, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar acc = Scalar::zero(x.at(0).field());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!y[j].is_zero()) acc += x[i] * g[i][j] * y[j];
    }
  }
  return acc;
}

}  // namespace f4
