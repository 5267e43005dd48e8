#include "f4/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace f4 {

namespace {

const mpz_class kWordLimit = mpz_class(1) << 64;

std::uint64_t to_u64(const mpz_class& z) {
  // mpz_get_ui is 64 bits wide on LP64 targets
  return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

mpz_class from_u64(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class mod_floor(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

namespace detail {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  mpz_class r;
  mpz_class aa = from_u64(a), pp = from_u64(p);
  if (a == 0 || mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0) {
    throw DivisionByZero("inverse of zero in GF(" + pp.get_str() + ")");
  }
  return to_u64(r);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument(p.get_str() + " is not prime");
  }
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  if (p < kWordLimit) {
    f.word_p_ = to_u64(p);
  } else {
    f.big_p_ = std::make_shared<const mpz_class>(p);
  }
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "q" || t == "qq" || t == "rationals") return rationals();
  if (t.rfind("gf:", 0) == 0) {
    std::string digits = t.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("malformed prime modulus '" + digits + "'");
    }
    return prime(mpz_class(digits));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or gf:<p>)");
}

mpz_class FieldSpec::characteristic() const {
  if (kind_ == Kind::Rationals) return 0;
  return modulus();
}

mpz_class FieldSpec::modulus() const {
  if (kind_ == Kind::Rationals) throw FieldError("the rationals have no modulus");
  return big_p_ ? *big_p_ : from_u64(word_p_);
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "GF(" + modulus().get_str() + ")";
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == FieldSpec::Kind::Rationals) return true;
  if (a.big_p_ || b.big_p_) return a.big_p_ && b.big_p_ && *a.big_p_ == *b.big_p_;
  return a.word_p_ == b.word_p_;
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.name(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const FieldSpec& field, long long n) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(static_cast<long>(n));
  } else if (field.word_sized()) {
    value_ = detail::reduce_int(n, field.word_modulus());
  } else {
    value_ = mod_floor(mpz_class(static_cast<long>(n)), field.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& q) : field_(field) {
  mpq_class c = q;
  c.canonicalize();
  if (field.is_rational()) {
    value_ = std::move(c);
    return;
  }
  mpz_class p = field.modulus();
  mpz_class den = mod_floor(c.get_den(), p);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw DivisionByZero("denominator of " + c.get_str() + " vanishes in " + field.name());
  }
  mpz_class r = mod_floor(c.get_num() * inv, p);
  if (field.word_sized()) {
    value_ = to_u64(r);
  } else {
    value_ = std::move(r);
  }
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string t(text);
  mpq_class q;
  if (t.empty() || q.set_str(t, 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + t + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + t + "'");
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::uint64_t>) {
          return v == 0;
        } else {
          return sgn(v) == 0;
        }
      },
      value_);
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("cannot combine " + field_.name() + " and " + o.field_.name() + " scalars");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else if (auto* w = std::get_if<std::uint64_t>(&value_)) {
    *w = detail::add_mod(*w, std::get<std::uint64_t>(o.value_), field_.word_modulus());
  } else {
    auto& z = std::get<mpz_class>(value_);
    z = mod_floor(z + std::get<mpz_class>(o.value_), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(o.value_);
  } else if (auto* w = std::get_if<std::uint64_t>(&value_)) {
    *w = detail::sub_mod(*w, std::get<std::uint64_t>(o.value_), field_.word_modulus());
  } else {
    auto& z = std::get<mpz_class>(value_);
    z = mod_floor(z - std::get<mpz_class>(o.value_), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else if (auto* w = std::get_if<std::uint64_t>(&value_)) {
    *w = detail::mul_mod(*w, std::get<std::uint64_t>(o.value_), field_.word_modulus());
  } else {
    auto& z = std::get<mpz_class>(value_);
    z = mod_floor(z * std::get<mpz_class>(o.value_), field_.modulus());
  }
  return *this;
}

Scalar Scalar::operator-() const { return zero(field_) - *this; }

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.name());
  if (const auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r = 1 / *q;
    r.canonicalize();
    return Scalar(field_, Value(std::move(r)));
  }
  if (const auto* w = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, Value(detail::inv_mod(*w, field_.word_modulus())));
  }
  mpz_class r;
  mpz_class p = field_.modulus();
  mpz_invert(r.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), p.get_mpz_t());
  return Scalar(field_, Value(std::move(r)));
}

Scalar Scalar::canonical() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, *q);
  if (const auto* w = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, Value(*w % field_.word_modulus()));
  }
  return Scalar(field_, Value(mod_floor(std::get<mpz_class>(value_), field_.modulus())));
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("rational() on a " + field_.name() + " scalar");
}

mpz_class Scalar::residue() const {
  if (const auto* w = std::get_if<std::uint64_t>(&value_)) return from_u64(*w);
  if (const auto* z = std::get_if<mpz_class>(&value_)) return *z;
  throw FieldError("residue() on a rational scalar");
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  if (const auto* w = std::get_if<std::uint64_t>(&value_)) return std::to_string(*w);
  return std::get<mpz_class>(value_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace f4
