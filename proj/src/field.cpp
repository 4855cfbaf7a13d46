#include "hopfrb/field.hpp"

#include <charconv>
#include <limits>
#include <utility>

namespace hopfrb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  mpz_class z;
  if (digits.empty() || digits == "-" || z.set_str(digits, 10) != 0) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  return z;
}

std::int64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw FieldError("prime modulus must be below 2^32");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  return {Kind::prime, p};
}

std::string FieldSpec::str() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p);
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw FieldError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational ScalarTraits<Rational>::make(const FieldSpec& f, long num, long den) {
  if (!f.is_rational()) throw FieldError("rational scalar requested in " + f.str());
  return Rational(num, den);
}

Rational ScalarTraits<Rational>::parse(const FieldSpec& f, std::string_view text) {
  if (!f.is_rational()) throw FieldError("rational scalar requested in " + f.str());
  const std::string_view s = trim(text);
  if (s.find("mod") != std::string_view::npos) {
    throw FieldError("prime-field literal '" + std::string(s) + "' in a rational structure");
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(s, text)));
  const mpz_class num = parse_integer(s.substr(0, slash), text);
  const mpz_class den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

// --- ModP -------------------------------------------------------------------

ModP::ModP(std::int64_t v, std::uint64_t p) : p_(p) {
  if (p == 0) {
    v_ = v;
    return;
  }
  const auto m = static_cast<std::int64_t>(p);
  v_ = v % m;
  if (v_ < 0) v_ += m;
}

std::uint64_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
    throw FieldError("field mismatch: F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
  }
  return a.p_ != 0 ? a.p_ : b.p_;
}

ModP& ModP::operator+=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw FieldError("integer overflow in unbound residue");
    return *this;
  }
  *this = ModP(rebound(p).v_ + o.rebound(p).v_, p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) { return *this += -o; }

ModP& ModP::operator*=(const ModP& o) {
  const auto p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw FieldError("integer overflow in unbound residue");
    return *this;
  }
  const __int128 prod = static_cast<__int128>(rebound(p).v_) * o.rebound(p).v_;
  *this = ModP(static_cast<std::int64_t>(prod % static_cast<__int128>(p)), p);
  return *this;
}

ModP operator-(const ModP& a) { return a.p_ == 0 ? ModP(-a.v_) : ModP(-a.v_, a.p_); }

bool operator==(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return a.rebound(p).v_ == b.rebound(p).v_;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw FieldError("division by zero");
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw FieldError("cannot invert an integer before its modulus is known");
  }
  return ModP(mod_inverse(v_, static_cast<std::int64_t>(p_)), p_);
}

std::string ModP::str() const {
  if (p_ == 0) return std::to_string(v_);
  return std::to_string(v_) + " mod " + std::to_string(p_);
}

ModP ScalarTraits<ModP>::make(const FieldSpec& f, long num, long den) {
  if (f.is_rational()) throw FieldError("prime-field scalar requested in Q");
  const ModP d(den, f.p);
  if (d.is_zero()) throw FieldError(std::to_string(den) + " is not invertible in " + f.str());
  return ModP(num, f.p) / d;
}

ModP ScalarTraits<ModP>::parse(const FieldSpec& f, std::string_view text) {
  if (f.is_rational()) throw FieldError("prime-field scalar requested in Q");
  std::string_view s = trim(text);
  if (const auto pos = s.find("mod"); pos != std::string_view::npos) {
    const mpz_class p = parse_integer(s.substr(pos + 3), text);
    if (p != static_cast<unsigned long>(f.p)) {
      throw FieldError("literal '" + std::string(s) + "' does not belong to " + f.str());
    }
    s = trim(s.substr(0, pos));
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return ModP(reduce(parse_integer(s, text), f.p), f.p);
  }
  const ModP num(reduce(parse_integer(s.substr(0, slash), text), f.p), f.p);
  const ModP den(reduce(parse_integer(s.substr(slash + 1), text), f.p), f.p);
  if (den.is_zero()) throw FieldError("denominator vanishes in " + f.str() + ": '" + std::string(text) + "'");
  return num / den;
}

}  // namespace hopfrb
