#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f4/octonion.hpp"

namespace f4 {

inline constexpr int kAlbertDim = 27;

/// Hermitian 3x3 matrix over the split octonions.  Only the diagonal and
/// the upper entries are stored; entry (j,i) is sigma of entry (i,j).
template <class S>
struct BasicAlbert {
  S d1, d2, d3;
  BasicOctonion<S> a12, a23, a13;

  static BasicAlbert zero(const context_of<S>& ctx) {
    S z = coeff_traits<S>::from_int(ctx, 0);
    auto o = BasicOctonion<S>::zero(ctx);
    return {z, z, z, o, o, o};
  }
  static BasicAlbert one(const context_of<S>& ctx) {
    BasicAlbert x = zero(ctx);
    x.d1 = x.d2 = x.d3 = coeff_traits<S>::from_int(ctx, 1);
    return x;
  }

  /// Coordinate k in 0..26, in Coord27 order.
  S& coord(int k) {
    if (k == 0) return d1;
    if (k == 1) return d2;
    if (k == 2) return d3;
    if (k < 11) return a12.coord(k - 3);
    if (k < 19) return a23.coord(k - 11);
    return a13.coord(k - 19);
  }
  const S& coord(int k) const { return const_cast<BasicAlbert*>(this)->coord(k); }

  BasicAlbert& operator+=(const BasicAlbert& o) { return *this = *this + o; }
  BasicAlbert& operator-=(const BasicAlbert& o) { return *this = *this - o; }

  friend BasicAlbert operator+(const BasicAlbert& x, const BasicAlbert& y) {
    return {x.d1 + y.d1, x.d2 + y.d2, x.d3 + y.d3, x.a12 + y.a12, x.a23 + y.a23, x.a13 + y.a13};
  }
  friend BasicAlbert operator-(const BasicAlbert& x, const BasicAlbert& y) {
    return {x.d1 - y.d1, x.d2 - y.d2, x.d3 - y.d3, x.a12 - y.a12, x.a23 - y.a23, x.a13 - y.a13};
  }
  friend BasicAlbert operator-(const BasicAlbert& x) {
    return {-x.d1, -x.d2, -x.d3, -x.a12, -x.a23, -x.a13};
  }
  friend BasicAlbert operator*(const S& k, const BasicAlbert& x) {
    return {k * x.d1, k * x.d2, k * x.d3, k * x.a12, k * x.a23, k * x.a13};
  }
  friend bool operator==(const BasicAlbert& x, const BasicAlbert& y) {
    return x.d1 == y.d1 && x.d2 == y.d2 && x.d3 == y.d3 && x.a12 == y.a12 && x.a23 == y.a23 &&
           x.a13 == y.a13;
  }
};

/// Freudenthal adjoint x#, satisfying (x#)# = norm3(x) x.
template <class S>
BasicAlbert<S> sharp(const BasicAlbert<S>& x) {
  const auto& a = x.a12;
  const auto& b = x.a23;
  const auto& c = x.a13;
  return {x.d2 * x.d3 - onorm(b),
          x.d1 * x.d3 - onorm(c),
          x.d1 * x.d2 - onorm(a),
          c * oconj(b) - x.d3 * a,
          oconj(a) * c - x.d1 * b,
          a * b - x.d2 * c};
}

/// Linearized adjoint: (x+y)# - x# - y#.
template <class S>
BasicAlbert<S> cross(const BasicAlbert<S>& x, const BasicAlbert<S>& y) {
  return sharp(x + y) - sharp(x) - sharp(y);
}

/// Cubic norm, normalized so that norm3(ONE) = 1.
template <class S>
S norm3(const BasicAlbert<S>& x) {
  return x.d1 * x.d2 * x.d3 - x.d1 * onorm(x.a23) - x.d2 * onorm(x.a13) - x.d3 * onorm(x.a12) +
         otrace((x.a12 * x.a23) * oconj(x.a13));
}

template <class S>
S trace_form(const BasicAlbert<S>& x, const BasicAlbert<S>& y) {
  return x.d1 * y.d1 + x.d2 * y.d2 + x.d3 * y.d3 + otrace(x.a12 * oconj(y.a12)) +
         otrace(x.a23 * oconj(y.a23)) + otrace(x.a13 * oconj(y.a13));
}

/// U_x(y) = T(x,y) x - x# cross y.
template <class S>
BasicAlbert<S> u_op(const BasicAlbert<S>& x, const BasicAlbert<S>& y) {
  return trace_form(x, y) * x - cross(sharp(x), y);
}

/// Jordan triple product {x,y,z} = U_{x+z} y - U_x y - U_z y.
template <class S>
BasicAlbert<S> triple(const BasicAlbert<S>& x, const BasicAlbert<S>& y, const BasicAlbert<S>& z) {
  return u_op(x + z, y) - u_op(x, y) - u_op(z, y);
}

using AlbertElement = BasicAlbert<Scalar>;
using Coord27 = std::array<Scalar, kAlbertDim>;

/// One of E1[1], E2[1], E3[1], Xk[ej].  index() is the Coord27 slot (0-based).
class BasisElement {
 public:
  static BasisElement E(int i);
  static BasisElement X(int k, int j);
  static BasisElement from_index(int index);
  /// Accepts "E2[1]" and "X3[e7]".
  static BasisElement parse(std::string_view name);
  static std::vector<BasisElement> all();

  int index() const { return index_; }
  bool is_diagonal() const { return index_ < 3; }
  std::string name() const;

  friend bool operator==(BasisElement, BasisElement) = default;

 private:
  explicit BasisElement(int index) : index_(index) {}
  int index_;
};

template <class S>
BasicAlbert<S> basis_element(const context_of<S>& ctx, BasisElement e) {
  BasicAlbert<S> x = BasicAlbert<S>::zero(ctx);
  x.coord(e.index()) = coeff_traits<S>::from_int(ctx, 1);
  return x;
}

Coord27 coor(const AlbertElement& x);
AlbertElement invcoor(const Coord27& c);

/// U_{e_i} e_j and T(e_i, e_j, e_k) on basis elements, expanded in
/// coordinates.  All entries are small integers, so a single table serves
/// every field.
class StructureTensors {
 public:
  static const StructureTensors& get();

  std::int64_t u(int i, int j, int coord) const { return u_[(i * kAlbertDim + j) * kAlbertDim + coord]; }
  std::int64_t t(int i, int j, int k, int coord) const {
    return t_[((i * kAlbertDim + j) * kAlbertDim + k) * kAlbertDim + coord];
  }

 private:
  StructureTensors();
  std::vector<std::int64_t> u_, t_;
};

}  // namespace f4
