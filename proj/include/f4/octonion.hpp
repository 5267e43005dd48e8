#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "f4/scalars.hpp"

namespace f4 {

/// Coefficient context for plain machine integers (used to tabulate the
/// integral structure tensors of the Albert algebra).
struct IntegerRing {
  friend bool operator==(IntegerRing, IntegerRing) { return true; }
};

template <class S>
struct coeff_traits;

template <>
struct coeff_traits<Scalar> {
  using context_type = FieldSpec;
  static Scalar from_int(const FieldSpec& f, long long n) { return Scalar(f, n); }
  static const FieldSpec& context(const Scalar& s) { return s.field(); }
};

template <>
struct coeff_traits<std::int64_t> {
  using context_type = IntegerRing;
  static std::int64_t from_int(IntegerRing, long long n) { return n; }
  static IntegerRing context(std::int64_t) { return {}; }
};

template <class S>
using context_of = typename coeff_traits<S>::context_type;

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
Vec3<S> vec3_zero(const context_of<S>& ctx) {
  S z = coeff_traits<S>::from_int(ctx, 0);
  return {z, z, z};
}

template <class S>
S dot3(const Vec3<S>& x, const Vec3<S>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

template <class S>
Vec3<S> cross3(const Vec3<S>& x, const Vec3<S>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

template <class S>
Vec3<S> operator+(const Vec3<S>& x, const Vec3<S>& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

template <class S>
Vec3<S> operator-(const Vec3<S>& x, const Vec3<S>& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

template <class S>
Vec3<S> operator-(const Vec3<S>& x) {
  return {-x[0], -x[1], -x[2]};
}

template <class S>
Vec3<S> scale3(const S& k, const Vec3<S>& x) {
  return {k * x[0], k * x[1], k * x[2]};
}

/// Sign of the cross-product terms in the Zorn product.  The opposite sign
/// also gives a split octonion algebra, but with it five printed identities
/// of the corpus (for instance U(X1[e6]; X1[e3]) == -1*X1[e6]) fail.
inline constexpr int kZornCrossSign = +1;

/// Split octonion as a Zorn vector matrix [[a, u], [v, b]].
///
/// Basis: e1 = (a=1), e2 = (b=1), e3..e5 the u slots, e6..e8 the v slots.
template <class S>
struct BasicOctonion {
  S a, b;
  Vec3<S> u, v;

  static BasicOctonion zero(const context_of<S>& ctx) {
    S z = coeff_traits<S>::from_int(ctx, 0);
    return {z, z, {z, z, z}, {z, z, z}};
  }
  static BasicOctonion one(const context_of<S>& ctx) {
    BasicOctonion o = zero(ctx);
    o.a = o.b = coeff_traits<S>::from_int(ctx, 1);
    return o;
  }
  /// e_j for j in 1..8.
  static BasicOctonion unit(const context_of<S>& ctx, int j) {
    if (j < 1 || j > 8) throw std::out_of_range("octonion basis index must be 1..8");
    BasicOctonion o = zero(ctx);
    o.coord(j - 1) = coeff_traits<S>::from_int(ctx, 1);
    return o;
  }

  /// Component k in 0..7 in the order a, b, u1, u2, u3, v1, v2, v3.
  S& coord(int k) {
    switch (k) {
      case 0: return a;
      case 1: return b;
      default: return k < 5 ? u[k - 2] : v[k - 5];
    }
  }
  const S& coord(int k) const { return const_cast<BasicOctonion*>(this)->coord(k); }

  BasicOctonion& operator+=(const BasicOctonion& o) { return *this = *this + o; }
  BasicOctonion& operator-=(const BasicOctonion& o) { return *this = *this - o; }

  friend BasicOctonion operator+(const BasicOctonion& x, const BasicOctonion& y) {
    return {x.a + y.a, x.b + y.b, x.u + y.u, x.v + y.v};
  }
  friend BasicOctonion operator-(const BasicOctonion& x, const BasicOctonion& y) {
    return {x.a - y.a, x.b - y.b, x.u - y.u, x.v - y.v};
  }
  friend BasicOctonion operator-(const BasicOctonion& x) { return {-x.a, -x.b, -x.u, -x.v}; }
  friend BasicOctonion operator*(const S& k, const BasicOctonion& x) {
    return {k * x.a, k * x.b, scale3(k, x.u), scale3(k, x.v)};
  }
  friend bool operator==(const BasicOctonion& x, const BasicOctonion& y) {
    return x.a == y.a && x.b == y.b && x.u == y.u && x.v == y.v;
  }
};

template <class S>
BasicOctonion<S> omul(const BasicOctonion<S>& x, const BasicOctonion<S>& y) {
  Vec3<S> uv = cross3(x.v, y.v);
  Vec3<S> uu = cross3(x.u, y.u);
  if constexpr (kZornCrossSign < 0) {
    uv = -uv;
    uu = -uu;
  }
  return {x.a * y.a + dot3(x.u, y.v),
          x.b * y.b + dot3(x.v, y.u),
          scale3(x.a, y.u) + scale3(y.b, x.u) - uv,
          scale3(y.a, x.v) + scale3(x.b, y.v) + uu};
}

template <class S>
BasicOctonion<S> operator*(const BasicOctonion<S>& x, const BasicOctonion<S>& y) {
  return omul(x, y);
}

/// The involution sigma.
template <class S>
BasicOctonion<S> oconj(const BasicOctonion<S>& x) {
  return {x.b, x.a, -x.u, -x.v};
}

template <class S>
S onorm(const BasicOctonion<S>& x) {
  return x.a * x.b - dot3(x.u, x.v);
}

template <class S>
S otrace(const BasicOctonion<S>& x) {
  return x.a + x.b;
}

using Octonion = BasicOctonion<Scalar>;

}  // namespace f4
