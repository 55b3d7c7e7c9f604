// Scalar fields: exact rationals (GMP) and the prime field F_p, p = 2^61 - 1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohom {

using Rational = mpq_class;
using Integer = mpz_class;

// Element of F_p with p the Mersenne prime 2^61 - 1.
struct Fp {
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  Fp() = default;
  static Fp raw(std::uint64_t x) {
    Fp r;
    r.v = x;
    return r;
  }
  static Fp from_int(long long x) {
    long long m = x % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    return raw(static_cast<std::uint64_t>(m));
  }
  static std::uint64_t reduce(unsigned __int128 x) {
    std::uint64_t lo = static_cast<std::uint64_t>(x & P);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    if (s >= P) s -= P;
    return s;
  }
  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v + b.v;
    if (s >= P) s -= P;
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v); }
  friend Fp operator-(Fp a) { return raw(a.v == 0 ? 0 : P - a.v); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(reduce(static_cast<unsigned __int128>(a.v) * b.v));
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp pow(std::uint64_t e) const {
    Fp r = raw(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(P - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
};

inline Fp to_fp(const Integer& z) {
  Integer m = z % Integer(static_cast<unsigned long>(Fp::P));
  if (m < 0) m += Integer(static_cast<unsigned long>(Fp::P));
  return Fp::raw(m.get_ui());
}

inline Fp to_fp(const Rational& q) {
  Fp d = to_fp(q.get_den());
  if (d.v == 0) throw std::domain_error("denominator divisible by the modulus");
  return to_fp(q.get_num()) * d.inv();
}

// Uniform field interface used by the templated linear algebra.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Fp> {
  static Fp zero() { return Fp{}; }
  static Fp one() { return Fp::raw(1); }
  static bool is_zero(const Fp& x) { return x.v == 0; }
  static Fp inv(const Fp& x) { return x.inv(); }
  static Fp from(const Rational& q) { return to_fp(q); }
};

template <>
struct FieldOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational inv(const Rational& x) { return 1 / x; }
  static Rational from(const Rational& q) { return q; }
};

// Parses "a", "-a", "a/b".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Deterministic source of bounded-height rationals (|num|, den <= height).
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int height = 97) : rng_(seed), height_(height) {}
  Rational next();
  // Nonzero numerator variant.
  Rational next_nonzero();
  std::vector<Rational> vector(int n);

 private:
  std::mt19937_64 rng_;
  int height_;
};

}  // namespace cohom
