#pragma once

// Exact scalars: arbitrary-precision rationals and prime-field elements.
// No floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace mero::exactalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (unsigned __int128)a * b % m;
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all q < 3,215,031,751.
inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Element of F_q, stored reduced. q must be prime, q <= 2^31.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint32_t q) : q_(q) {
    if (q_ < 2) throw PreconditionError("Fp: modulus must be >= 2");
    v_ = static_cast<std::uint32_t>(v % q_);
  }
  static Fp from_int(std::int64_t v, std::uint32_t q) {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    if (r < 0) r += q;
    return Fp(static_cast<std::uint64_t>(r), q);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return q_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(const Fp& o) const { check(o); return Fp((std::uint64_t)v_ + o.v_, q_); }
  Fp operator-(const Fp& o) const { check(o); return Fp((std::uint64_t)v_ + q_ - o.v_, q_); }
  Fp operator*(const Fp& o) const { check(o); return Fp((std::uint64_t)v_ * o.v_, q_); }
  Fp operator-() const { return Fp((std::uint64_t)q_ - v_, q_); }

  Fp inverse() const {
    if (v_ == 0) throw ArithmeticError("Fp: inverse of zero");
    // Extended Euclid on (v, q).
    std::int64_t t = 0, nt = 1, r = q_, nr = v_;
    while (nr != 0) {
      std::int64_t quo = r / nr;
      std::int64_t tmp = t - quo * nt; t = nt; nt = tmp;
      tmp = r - quo * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += q_;
    return Fp(static_cast<std::uint64_t>(t), q_);
  }

  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  bool operator==(const Fp& o) const { return q_ == o.q_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  void check(const Fp& o) const {
    if (q_ != o.q_) throw ArithmeticError("Fp: modulus mismatch");
  }
  std::uint32_t v_ = 0;
  std::uint32_t q_ = 0;
};

// Tagged union of an exact rational and a prime-field element. Arithmetic
// requires both operands in the same mode (and modulus); conversions are
// explicit via to_fp().
class Scalar {
 public:
  Scalar() : val_(Rational(0)) {}
  Scalar(int v) : val_(Rational(v)) {}
  Scalar(long long v) : val_(Rational(v)) {}
  Scalar(const Rational& r) : val_(r) {}
  Scalar(const BigInt& n) : val_(Rational(n)) {}
  Scalar(const Fp& f) : val_(f) {}

  static Scalar rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("Scalar: zero denominator");
    return Scalar(Rational(num, den));
  }
  static Scalar fp(std::uint64_t v, std::uint32_t q) { return Scalar(Fp(v, q)); }

  bool is_rational() const { return std::holds_alternative<Rational>(val_); }
  bool is_fp() const { return std::holds_alternative<Fp>(val_); }
  const Rational& rat() const { return std::get<Rational>(val_); }
  const Fp& field() const { return std::get<Fp>(val_); }
  std::uint32_t modulus() const { return field().modulus(); }

  bool is_zero() const {
    return is_rational() ? rat() == 0 : field().is_zero();
  }
  bool is_one() const {
    return is_rational() ? rat() == 1 : field().is_one();
  }

  Scalar to_fp(std::uint32_t q) const {
    if (is_fp()) {
      if (modulus() != q) throw ArithmeticError("Scalar: modulus mismatch");
      return *this;
    }
    const Rational& r = rat();
    BigInt num = boost::multiprecision::numerator(r) % q;
    BigInt den = boost::multiprecision::denominator(r) % q;
    if (num < 0) num += q;
    if (den < 0) den += q;
    Fp n(num.convert_to<std::uint64_t>(), q);
    Fp d(den.convert_to<std::uint64_t>(), q);
    if (d.is_zero()) throw ArithmeticError("Scalar: denominator vanishes mod q");
    return Scalar(n / d);
  }

  Scalar operator+(const Scalar& o) const {
    return apply(o, [](const Rational& a, const Rational& b) { return Rational(a + b); },
                 [](const Fp& a, const Fp& b) { return a + b; });
  }
  Scalar operator-(const Scalar& o) const {
    return apply(o, [](const Rational& a, const Rational& b) { return Rational(a - b); },
                 [](const Fp& a, const Fp& b) { return a - b; });
  }
  Scalar operator*(const Scalar& o) const {
    return apply(o, [](const Rational& a, const Rational& b) { return Rational(a * b); },
                 [](const Fp& a, const Fp& b) { return a * b; });
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator-() const {
    if (is_rational()) return Scalar(Rational(-rat()));
    return Scalar(-field());
  }

  Scalar inverse() const {
    if (is_rational()) {
      if (rat() == 0) throw ArithmeticError("Scalar: inverse of zero");
      return Scalar(Rational(1) / rat());
    }
    return Scalar(field().inverse());
  }

  Scalar pow(long long e) const {
    Scalar base = *this;
    if (e < 0) { base = inverse(); e = -e; }
    Scalar r = is_rational() ? Scalar(1) : Scalar(Fp(1, modulus()));
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    return is_rational() ? rat() == o.rat() : field() == o.field();
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (is_rational()) {
      const Rational& r = rat();
      BigInt num = boost::multiprecision::numerator(r);
      BigInt den = boost::multiprecision::denominator(r);
      if (den == 1) return num.str();
      return num.str() + "/" + den.str();
    }
    return std::to_string(field().value());
  }

 private:
  template <class FR, class FF>
  Scalar apply(const Scalar& o, FR fr, FF ff) const {
    if (is_rational() && o.is_rational()) return Scalar(fr(rat(), o.rat()));
    if (is_fp() && o.is_fp()) return Scalar(ff(field(), o.field()));
    throw ArithmeticError("Scalar: mixed rational/prime-field arithmetic");
  }

  std::variant<Rational, Fp> val_;
};

}  // namespace mero::exactalg
