#pragma once

#include <random>

#include "f4/albert.hpp"

namespace f4::testutil {

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng, int range = 3) {
  if (f.is_rational()) return Scalar(f, std::uniform_int_distribution<long long>(-range, range)(rng));
  auto p = f.word_sized() ? f.word_modulus() : ~0ull;
  return Scalar(f, mpq_class(mpz_class(static_cast<unsigned long>(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng)))));
}

inline Octonion random_octonion(const FieldSpec& f, std::mt19937_64& rng, int range = 3) {
  Octonion o = Octonion::zero(f);
  for (int k = 0; k < 8; ++k) o.coord(k) = random_scalar(f, rng, range);
  return o;
}

inline AlbertElement random_albert(const FieldSpec& f, std::mt19937_64& rng, int range = 3) {
  AlbertElement x = AlbertElement::zero(f);
  for (int k = 0; k < kAlbertDim; ++k) x.coord(k) = random_scalar(f, rng, range);
  return x;
}

/// Independent model of the Jordan structure: the element as an honest 3x3
/// octonion matrix, x.y = (xy + yx)/2 and U_x y = 2 x.(x.y) - (x.x).y.
/// Needs 2 invertible.
class MatrixJordan {
 public:
  using M = std::array<std::array<Octonion, 3>, 3>;

  static M to_matrix(const AlbertElement& x) {
    const FieldSpec& f = x.d1.field();
    auto one = Octonion::one(f);
    return {{{x.d1 * one, x.a12, x.a13},
             {oconj(x.a12), x.d2 * one, x.a23},
             {oconj(x.a13), oconj(x.a23), x.d3 * one}}};
  }

  static AlbertElement from_matrix(const M& m) {
    return {m[0][0].a, m[1][1].a, m[2][2].a, m[0][1], m[1][2], m[0][2]};
  }

  static AlbertElement jordan(const AlbertElement& x, const AlbertElement& y) {
    const FieldSpec& f = x.d1.field();
    M a = to_matrix(x), b = to_matrix(y), r;
    Scalar half = Scalar(f, 1LL) / Scalar(f, 2LL);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Octonion s = Octonion::zero(f);
        for (int k = 0; k < 3; ++k) s += omul(a[i][k], b[k][j]) + omul(b[i][k], a[k][j]);
        r[i][j] = half * s;
      }
    }
    return from_matrix(r);
  }

  static AlbertElement u(const AlbertElement& x, const AlbertElement& y) {
    const FieldSpec& f = x.d1.field();
    return Scalar(f, 2LL) * jordan(x, jordan(x, y)) - jordan(jordan(x, x), y);
  }
};

}  // namespace f4::testutil
