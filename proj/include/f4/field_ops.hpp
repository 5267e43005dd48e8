#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "f4/scalars.hpp"

// Unboxed field kernels for the hot loops (elimination, bracket products).
// Each kernel carries its FieldSpec and converts to and from Scalar at the
// boundary; in between, elements are plain machine words, mpq or mpz values.
namespace f4 {

/// GF(p) with p < 2^64; elements are residues in a uint64_t.
struct WordPrimeOps {
  using T = std::uint64_t;

  explicit WordPrimeOps(const FieldSpec& f) : field(f), p(f.word_modulus()) {}

  FieldSpec field;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from_int(long long n) const { return detail::reduce_int(n, p); }
  T from_scalar(const Scalar& s) const { return static_cast<T>(mpz_get_ui(s.residue().get_mpz_t())); }
  Scalar to_scalar(T x) const { return Scalar(field, mpq_class(mpz_class(static_cast<unsigned long>(x)))); }

  bool is_zero(T x) const { return x == 0; }
  T add(T a, T b) const { return detail::add_mod(a, b, p); }
  T sub(T a, T b) const { return detail::sub_mod(a, b, p); }
  T mul(T a, T b) const { return detail::mul_mod(a, b, p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const { return detail::inv_mod(a, p); }
  /// acc -= f * x
  void sub_mul(T& acc, T f, T x) const { acc = sub(acc, mul(f, x)); }
};

/// GF(p) for moduli that do not fit a machine word.
struct BigPrimeOps {
  using T = mpz_class;

  explicit BigPrimeOps(const FieldSpec& f) : field(f), p(f.modulus()) {}

  FieldSpec field;
  mpz_class p;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from_int(long long n) const { return reduce(mpz_class(static_cast<long>(n))); }
  T from_scalar(const Scalar& s) const { return s.residue(); }
  Scalar to_scalar(const T& x) const { return Scalar(field, mpq_class(x)); }

  bool is_zero(const T& x) const { return sgn(x) == 0; }
  T add(const T& a, const T& b) const { return reduce(a + b); }
  T sub(const T& a, const T& b) const { return reduce(a - b); }
  T mul(const T& a, const T& b) const { return reduce(a * b); }
  T neg(const T& a) const { return reduce(-a); }
  T inv(const T& a) const {
    mpz_class r;
    if (sgn(a) == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw DivisionByZero("inverse of zero in " + field.name());
    }
    return r;
  }
  void sub_mul(T& acc, const T& f, const T& x) const { acc = reduce(acc - f * x); }

  T reduce(const mpz_class& a) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
};

struct RationalOps {
  using T = mpq_class;

  explicit RationalOps(const FieldSpec& f) : field(f) {}

  FieldSpec field;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from_int(long long n) const { return mpq_class(static_cast<long>(n)); }
  T from_scalar(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const T& x) const { return Scalar(field, x); }

  bool is_zero(const T& x) const { return sgn(x) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (sgn(a) == 0) throw DivisionByZero("inverse of zero in Q");
    return 1 / a;
  }
  void sub_mul(T& acc, const T& f, const T& x) const { acc -= f * x; }
};

/// Calls fn with the kernel matching `field`.  All branches must return the
/// same type.
template <class Fn>
decltype(auto) dispatch_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalOps(field));
  if (field.word_sized()) return fn(WordPrimeOps(field));
  return fn(BigPrimeOps(field));
}

}  // namespace f4
