// Exact coefficient fields: arbitrary-precision rationals and prime fields.
//
// Every structure in the library is templated on one of the two scalar types
// below. Both are usable as Eigen scalars (see the NumTraits specializations
// at the end of this file).
#ifndef HOPFRB_FIELD_HPP
#define HOPFRB_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace hopfrb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};

bool is_prime(std::uint64_t p);

/// Which exact field the coefficients live in.
struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static FieldSpec rational() { return {}; }
  /// Throws FieldError unless `p` is prime and below 2^32.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return kind == Kind::rational; }
  /// Characteristic of the field (0 for Q).
  std::uint64_t characteristic() const { return is_rational() ? 0 : p; }
  std::string str() const;
  /// Modulus tag carried by scalars of this field (0 for Q).
  std::uint64_t tag() const { return characteristic(); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& get() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational inverse() const;
  std::string str() const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

/// Residue modulo a prime p < 2^32.
///
/// A residue constructed from a bare integer is "unbound" (modulus 0) until it
/// meets a bound residue; this is what lets Eigen write Scalar(0) and
/// Scalar(1) internally. Mixing two different moduli throws FieldError.
class ModP {
 public:
  ModP() = default;
  template <std::integral I>
  ModP(I v) : v_(static_cast<std::int64_t>(v)) {}
  ModP(std::int64_t v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Residue in [0, p) when bound; the raw integer otherwise.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const;
  std::string str() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a);
  friend bool operator==(const ModP& a, const ModP& b);

 private:
  static std::uint64_t common_modulus(const ModP& a, const ModP& b);
  ModP rebound(std::uint64_t p) const { return p_ == p ? *this : ModP(v_, p); }

  std::uint64_t p_ = 0;
  std::int64_t v_ = 0;
};

// Functions Eigen looks up by ADL for real scalar types.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return {}; }
inline Rational abs2(const Rational& x) { return x * x; }
inline Rational abs(const Rational& x) { return x < Rational{} ? -x : x; }
inline const ModP& conj(const ModP& x) { return x; }
inline const ModP& real(const ModP& x) { return x; }
inline ModP imag(const ModP&) { return {}; }
inline ModP abs2(const ModP& x) { return x * x; }

/// Scalar construction and formatting, parameterized by the field.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool supports(const FieldSpec& f) { return f.is_rational(); }
  static Rational make(const FieldSpec& f, long num, long den = 1);
  static Rational parse(const FieldSpec& f, std::string_view text);
  static std::string format(const Rational& x) { return x.str(); }
  /// Modulus tag used for field-consistency checks; always 0 for Q.
  static std::uint64_t tag(const Rational&) { return 0; }
  static Rational rebind(const Rational& x, std::uint64_t) { return x; }
};

template <>
struct ScalarTraits<ModP> {
  static bool supports(const FieldSpec& f) { return !f.is_rational(); }
  static ModP make(const FieldSpec& f, long num, long den = 1);
  static ModP parse(const FieldSpec& f, std::string_view text);
  static std::string format(const ModP& x) { return x.str(); }
  static std::uint64_t tag(const ModP& x) { return x.modulus(); }
  /// Attaches modulus `p` to an unbound residue (no-op when p is 0).
  static ModP rebind(const ModP& x, std::uint64_t p) {
    return x.bound() || p == 0 ? x : ModP(x.value(), p);
  }
};

template <class S>
S scalar(const FieldSpec& f, long num, long den = 1) {
  return ScalarTraits<S>::make(f, num, den);
}

template <class S>
S parse_scalar(const FieldSpec& f, std::string_view text) {
  return ScalarTraits<S>::parse(f, text);
}

template <class S>
std::string to_string(const S& x) {
  return ScalarTraits<S>::format(x);
}

}  // namespace hopfrb

namespace Eigen {

template <>
struct NumTraits<hopfrb::Rational> : GenericNumTraits<hopfrb::Rational> {
  using Real = hopfrb::Rational;
  using NonInteger = hopfrb::Rational;
  using Nested = hopfrb::Rational;
  using Literal = hopfrb::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static Real epsilon() { return {}; }
  static Real dummy_precision() { return {}; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<hopfrb::ModP> : GenericNumTraits<hopfrb::ModP> {
  using Real = hopfrb::ModP;
  using NonInteger = hopfrb::ModP;
  using Nested = hopfrb::ModP;
  using Literal = hopfrb::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return {}; }
  static Real dummy_precision() { return {}; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HOPFRB_FIELD_HPP
