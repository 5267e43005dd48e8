#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace f4 {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from two different fields were combined.
class FieldMismatch : public FieldError {
 public:
  using FieldError::FieldError;
};

class DivisionByZero : public FieldError {
 public:
  using FieldError::FieldError;
};

/// The coefficient field: the rationals or GF(p) for a prime p.
///
/// Moduli below 2^64 are kept in a machine word; larger ones are held as a
/// GMP integer and elements over them fall back to big-integer residues.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;  // the rationals

  static FieldSpec rationals() { return {}; }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(const mpz_class& p);
  static FieldSpec prime(std::uint64_t p) { return prime(mpz_class(static_cast<unsigned long>(p))); }

  /// Parses the command-line spelling: "q" or "gf:<p>" (case-insensitive).
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// 0 for the rationals, p otherwise.
  mpz_class characteristic() const;
  /// True when the modulus fits in 64 bits (prime fields only).
  bool word_sized() const { return kind_ == Kind::PrimeField && !big_p_; }
  std::uint64_t word_modulus() const { return word_p_; }
  /// The prime modulus; throws FieldError for the rationals.
  mpz_class modulus() const;

  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t word_p_ = 0;
  std::shared_ptr<const mpz_class> big_p_;
};

/// An exact element of a FieldSpec.
///
/// Rationals are stored reduced with a positive denominator; prime-field
/// elements are canonical residues in [0, p).  Every binary operation
/// requires both operands to share a field and throws FieldMismatch
/// otherwise.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const FieldSpec& field, long long n);
  /// For prime fields the denominator must be invertible mod p.
  Scalar(const FieldSpec& field, const mpq_class& q);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0LL); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1LL); }
  /// Accepts "p/q", an integer, or (for prime fields) any integer literal.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws DivisionByZero for zero.
  Scalar inv() const;
  /// Re-establishes canonical form; the identity on every valid Scalar.
  Scalar canonical() const;

  /// Only for rational scalars.
  const mpq_class& rational() const;
  /// Only for prime-field scalars: the residue in [0, p).
  mpz_class residue() const;

  /// JSON/text encoding: "-3/4", "5", or the decimal residue.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(long long k, const Scalar& a) { return Scalar(a.field_, k) * a; }
  friend Scalar operator*(const Scalar& a, long long k) { return k * a; }

  /// Scalars from different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  using Value = std::variant<mpq_class, std::uint64_t, mpz_class>;

  Scalar(FieldSpec field, Value v) : field_(std::move(field)), value_(std::move(v)) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  Value value_ = mpq_class(0);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= p - b ? a - (p - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t reduce_int(long long n, std::uint64_t p) {
  if (n >= 0) return static_cast<std::uint64_t>(n) % p;
  std::uint64_t r = (static_cast<std::uint64_t>(-(n + 1)) + 1) % p;
  return r == 0 ? 0 : p - r;
}

/// Extended Euclid; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace detail

}  // namespace f4
