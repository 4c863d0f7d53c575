#pragma once

// Exact coefficient fields: the rationals (GMP-backed) and prime fields F_p.
//
// Every field type F exposes
//   using Element;                 value type, immutable arithmetic
//   zero(), one(), from_int(n)
//   from_fraction(num, den)        decimal strings, den != 0
//   sqrt(a) -> optional<Element>   exact square root when one exists
//   name()                         "q" or "fp:<p>"
// and elements support + - * unary-, inverse(), ==, is_zero(), to_string().

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace wcit {

// ---------------------------------------------------------------------------
// Rationals

class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  int sign() const noexcept { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  /// "a" or "a/b" with b > 0.
  std::string to_string() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

private:
  mpq_class v_;
};

struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(long n) const { return Rational(n); }
  Element from_fraction(const std::string& num, const std::string& den) const {
    return Rational(mpz_class(num, 10), mpz_class(den, 10));
  }

  std::optional<Element> sqrt(const Element& a) const {
    if (a.sign() < 0) return std::nullopt;
    mpz_class n = a.numerator(), d = a.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
  }

  std::string name() const { return "q"; }
  std::uint64_t characteristic() const { return 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---------------------------------------------------------------------------
// Prime fields

/// Residue modulo an odd prime p < 2^31. Each value carries its modulus so
/// that arithmetic across different primes is detected.
class Fp {
public:
  Fp(std::int64_t n, std::uint32_t prime) : prime_(prime) {
    std::int64_t r = n % static_cast<std::int64_t>(prime);
    if (r < 0) r += prime;
    value_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t prime() const noexcept { return prime_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Fp inverse() const {
    if (value_ == 0) throw DivisionByZero();
    return pow(prime_ - 2);
  }

  Fp pow(std::uint64_t e) const {
    std::uint64_t base = value_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % prime_;
      base = base * base % prime_;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc), prime_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.prime_) s -= a.prime_;
    return raw(s, a.prime_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint32_t s = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.prime_ - b.value_;
    return raw(s, a.prime_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.value_) * b.value_ % a.prime_), a.prime_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return raw(value_ == 0 ? 0 : prime_ - value_, prime_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    check(a, b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string to_string() const { return std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value_; }

private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r(0, p);
    r.value_ = v;
    return r;
  }
  static void check(const Fp& a, const Fp& b) {
    if (a.prime_ != b.prime_)
      throw FieldMismatch("operands from F_" + std::to_string(a.prime_) + " and F_" +
                          std::to_string(b.prime_));
  }

  std::uint32_t value_ = 0;
  std::uint32_t prime_;
};

inline bool is_prime(std::uint64_t n) {
  mpz_class z(std::to_string(n), 10);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

class PrimeField {
public:
  using Element = Fp;

  static constexpr std::uint64_t kMaxPrime = (std::uint64_t(1) << 31) - 1;
  /// Primes below this are accepted but flagged: modular ranks are only
  /// lower bounds for rational ranks and small primes hit bad reductions often.
  static constexpr std::uint64_t kRecommendedMin = std::uint64_t(1) << 20;

  explicit PrimeField(std::uint64_t p) {
    if (p < 3 || p > kMaxPrime || !is_prime(p))
      throw DomainError("prime field modulus must be an odd prime below 2^31, got " +
                        std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
  }

  std::uint32_t prime() const noexcept { return p_; }

  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(long n) const { return Fp(n, p_); }
  Element from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num, 10), d(den, 10);
    mpz_class nm, dm;
    mpz_fdiv_r_ui(nm.get_mpz_t(), n.get_mpz_t(), p_);
    mpz_fdiv_r_ui(dm.get_mpz_t(), d.get_mpz_t(), p_);
    Fp fd(static_cast<std::int64_t>(dm.get_ui()), p_);
    if (fd.is_zero()) throw DivisionByZero();
    return Fp(static_cast<std::int64_t>(nm.get_ui()), p_) * fd.inverse();
  }

  /// Tonelli-Shanks.
  std::optional<Element> sqrt(const Element& a) const {
    if (a.is_zero()) return a;
    if (a.pow((p_ - 1) / 2) != one()) return std::nullopt;
    std::uint32_t q = p_ - 1, s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Fp z = from_int(2);
    while (z.pow((p_ - 1) / 2) == one()) z = z + one();
    Fp c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
    std::uint32_t m = s;
    while (!t.is_one()) {
      std::uint32_t i = 0;
      Fp tt = t;
      while (!tt.is_one()) { tt = tt * tt; ++i; }
      Fp b = c;
      for (std::uint32_t k = 0; k + i + 1 < m; ++k) b = b * b;
      m = i;
      c = b * b;
      t = t * c;
      r = r * b;
    }
    return r;
  }

  std::string name() const { return "fp:" + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;
};

} // namespace wcit
