#pragma once
// Exact coefficient fields. Two implementations share one informal concept:
//
//   struct Field {
//     using Elt = ...;            // value type, no per-element field tag
//     Elt zero(), one();
//     Elt add/sub/mul/div/neg/inv(...);
//     Elt from_long(long long);
//     bool is_zero(const Elt&);
//     std::string str(const Elt&);
//   };
//
// Algorithms take the field as an explicit context object. Containers that
// can be combined (matrices, polynomials) carry a copy of their field and
// refuse to mix unequal ones, so GF(p) and GF(q) data cannot meet silently.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace syz {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

// Invariant checks stay on in release builds; everything here is exact
// arithmetic and a silent wrong answer is worse than the cycle cost.
#define SYZ_CHECK(cond, msg) \
  do {                       \
    if (!(cond)) ::syz::fail(msg); \
  } while (0)

using Rational = mpq_class;

// Prime field GF(p) for p < 2^16 or so; products of two reduced elements fit
// comfortably in 64 bits, so no reduction tricks are needed.
struct GfpField {
  using Elt = std::uint32_t;

  std::uint32_t p = 32003;

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p; }
  bool is_zero(Elt a) const { return a == 0; }

  Elt add(Elt a, Elt b) const {
    Elt s = a + b;
    return s >= p ? s - p : s;
  }
  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p - b; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
  Elt mul(Elt a, Elt b) const {
    return static_cast<Elt>((std::uint64_t)a * b % p);
  }

  Elt inv(Elt a) const {
    SYZ_CHECK(a != 0, "GfpField: inverse of zero");
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Elt>(t);
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  Elt from_long(long long n) const {
    long long m = n % (long long)p;
    if (m < 0) m += p;
    return static_cast<Elt>(m);
  }

  // Representative in (-p/2, p/2]; keeps printed polynomials readable
  // (differentials full of p-1 coefficients are just -1 in disguise).
  long long lift_balanced(Elt a) const {
    return a <= p / 2 ? (long long)a : (long long)a - (long long)p;
  }

  std::string str(Elt a) const { return std::to_string(lift_balanced(a)); }

  bool operator==(const GfpField& o) const { return p == o.p; }
  bool operator!=(const GfpField& o) const { return p != o.p; }
};

// Arbitrary-precision rationals via GMP. mpq_class keeps values canonical.
struct RatField {
  using Elt = Rational;

  Elt zero() const { return Rational(0); }
  Elt one() const { return Rational(1); }
  bool is_zero(const Elt& a) const { return sgn(a) == 0; }

  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const {
    SYZ_CHECK(sgn(a) != 0, "RatField: inverse of zero");
    return Rational(1) / a;
  }
  Elt div(const Elt& a, const Elt& b) const {
    SYZ_CHECK(sgn(b) != 0, "RatField: division by zero");
    return a / b;
  }

  Elt from_long(long long n) const {
    // mpq_class has no long long ctor on all platforms; go through mpz
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), n);
    return Rational(z);
  }

  std::string str(const Elt& a) const { return a.get_str(); }

  bool operator==(const RatField&) const { return true; }
  bool operator!=(const RatField&) const { return false; }
};

inline std::string rational_str(const Rational& a) { return a.get_str(); }

// mpq_class(num, den) does NOT canonicalize; always build fractions here.
inline Rational make_rational(long long num, long long den) {
  SYZ_CHECK(den != 0, "make_rational: zero denominator");
  Rational q(Rational((long)num) / Rational((long)den));
  return q;
}

}  // namespace syz
