#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace eres {


struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input or a violated precondition of a public operation.
struct DomainError : Error {
  using Error::Error;
};

// An internal consistency check failed while transforming or descending.
struct InvariantError : Error {
  using Error::Error;
};

// Exact rational on 64-bit parts; intermediates are 128-bit and overflow raises.
class Rational {
 public:
  using Int = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(Int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(int n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) { assign(n, d); }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return make(static_cast<__int128>(a.num_) + b.num_, a.den_);
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational out = *this;
    out.num_ = -num_;
    return out;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lo = std::numeric_limits<Int>::min(), hi = std::numeric_limits<Int>::max();
    if (n < lo || n > hi || d > hi) throw DomainError("rational overflow");
    Rational out;
    out.num_ = static_cast<Int>(n);
    out.den_ = static_cast<Int>(d);
    return out;
  }
  void assign(Int n, Int d) {
    if (d == 0) throw DomainError("zero denominator");
    *this = make(n, d);
  }

  Int num_ = 0;
  Int den_ = 1;
};

// Unbounded rationals for field coefficients in characteristic 0.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto whole = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed rational '" + text + "'");
    }
    if (used != part.size()) throw DomainError("malformed rational '" + text + "'");
    return static_cast<Rational::Int>(v);
  };
  if (slash == std::string::npos) return Rational(whole(text));
  return Rational(whole(text.substr(0, slash)), whole(text.substr(slash + 1)));
}

inline BigRational parse_big_rational(const std::string& text) {
  try {
    return BigRational(text);
  } catch (const std::exception&) {
    throw DomainError("malformed rational '" + text + "'");
  }
}

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Element of Q (characteristic 0) or of F_p.
class Coefficient {
 public:
  Coefficient() = default;

  static Coefficient from_rational(unsigned characteristic, const BigRational& q) {
    Coefficient out;
    out.p_ = characteristic;
    if (characteristic == 0) {
      out.q_ = q;
      return out;
    }
    if (!is_prime(characteristic)) throw DomainError("characteristic must be 0 or prime");
    using boost::multiprecision::cpp_int;
    const cpp_int m = characteristic;
    const cpp_int dr = ((boost::multiprecision::denominator(q) % m) + m) % m;
    if (dr == 0) throw DomainError("denominator vanishes modulo " + std::to_string(characteristic));
    const cpp_int nr = ((boost::multiprecision::numerator(q) % m) + m) % m;
    out.r_ = mulmod(static_cast<std::uint64_t>(nr), inverse_mod(static_cast<std::uint64_t>(dr), characteristic),
                    characteristic);
    return out;
  }
  static Coefficient from_int(unsigned characteristic, long v) {
    return from_rational(characteristic, BigRational(v));
  }
  static Coefficient one(unsigned characteristic) { return from_int(characteristic, 1); }
  static Coefficient zero(unsigned characteristic) { return from_int(characteristic, 0); }

  unsigned characteristic() const { return p_; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

  Coefficient operator*(const Coefficient& o) const {
    same_field(o);
    Coefficient out = *this;
    if (p_ == 0)
      out.q_ *= o.q_;
    else
      out.r_ = mulmod(r_, o.r_, p_);
    return out;
  }
  Coefficient operator+(const Coefficient& o) const {
    same_field(o);
    Coefficient out = *this;
    if (p_ == 0)
      out.q_ += o.q_;
    else
      out.r_ = (r_ + o.r_) % p_;
    return out;
  }
  Coefficient operator-() const {
    Coefficient out = *this;
    if (p_ == 0)
      out.q_ = -q_;
    else
      out.r_ = (p_ - r_) % p_;
    return out;
  }
  Coefficient operator-(const Coefficient& o) const { return *this + (-o); }

  Coefficient inverse() const {
    if (is_zero()) throw DomainError("division by zero coefficient");
    Coefficient out = *this;
    if (p_ == 0)
      out.q_ = 1 / q_;
    else
      out.r_ = inverse_mod(r_, p_);
    return out;
  }
  Coefficient operator/(const Coefficient& o) const { return *this * o.inverse(); }

  Coefficient pow(long k) const {
    Coefficient base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Coefficient acc = one(p_);
    while (e) {
      if (e & 1UL) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  bool operator==(const Coefficient& o) const {
    return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
  }
  bool operator<(const Coefficient& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return p_ == 0 ? q_ < o.q_ : r_ < o.r_;
  }

  // Rational value in characteristic 0, least non-negative residue otherwise.
  BigRational value() const { return p_ == 0 ? q_ : BigRational(r_); }

  std::string to_string() const {
    if (p_ == 0) return eres::to_string(q_);
    return std::to_string(r_) + "/1";
  }

 private:
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  }
  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t result = 1, base = a % m, e = m - 2;
    while (e) {
      if (e & 1U) result = mulmod(result, base, m);
      base = mulmod(base, base, m);
      e >>= 1U;
    }
    return result;
  }
  void same_field(const Coefficient& o) const {
    if (p_ != o.p_) throw DomainError("coefficients from different fields");
  }

  unsigned p_ = 0;
  BigRational q_ = 0;
  std::uint64_t r_ = 0;
};

}  // namespace eres
