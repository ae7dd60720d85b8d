#pragma once
// Sparse polynomials over a field, plus the small text format used by problem
// files and the CLI: terms like "2*X^2*Y - Z^3 + 5", variables by name,
// integer coefficients. Parsed polynomials keep integer coefficients until a
// field is chosen, so one problem file serves both GF(p) and Q.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "syz/monomial.hpp"

namespace syz {

template <class C>
struct BasicPoly {
  // terms sorted lex-descending, coefficients nonzero, monomials distinct
  std::vector<std::pair<C, Monomial>> terms;

  bool is_zero() const { return terms.empty(); }
};

template <class F>
using Poly = BasicPoly<typename F::Elt>;

using PolyAst = BasicPoly<long long>;

template <class C, class IsZero>
void normalize_poly(BasicPoly<C>& p, IsZero is_zero, const C& /*zero_witness*/) {
  std::sort(p.terms.begin(), p.terms.end(),
            [](const auto& a, const auto& b) { return lex_greater(a.second, b.second); });
  std::vector<std::pair<C, Monomial>> out;
  for (auto& t : p.terms) {
    if (!out.empty() && out.back().second == t.second)
      out.back().first = out.back().first + t.first;
    else
      out.push_back(t);
    if (!out.empty() && is_zero(out.back().first)) out.pop_back();
  }
  p.terms = std::move(out);
}

template <class F>
void normalize_poly(const F& f, Poly<F>& p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [](const auto& a, const auto& b) { return lex_greater(a.second, b.second); });
  std::vector<std::pair<typename F::Elt, Monomial>> out;
  for (auto& t : p.terms) {
    if (!out.empty() && out.back().second == t.second)
      out.back().first = f.add(out.back().first, t.first);
    else
      out.push_back(t);
    if (!out.empty() && f.is_zero(out.back().first)) out.pop_back();
  }
  p.terms = std::move(out);
}

template <class F>
Poly<F> poly_from_ast(const F& f, const PolyAst& a) {
  Poly<F> p;
  for (const auto& [c, m] : a.terms) p.terms.push_back({f.from_long(c), m});
  normalize_poly(f, p);
  return p;
}

// Degree of a homogeneous polynomial; nullopt for 0 or mixed degrees.
template <class C>
std::optional<int> homogeneous_degree(const BasicPoly<C>& p) {
  if (p.terms.empty()) return std::nullopt;
  int d = mono_degree(p.terms.front().second);
  for (const auto& t : p.terms)
    if (mono_degree(t.second) != d) return std::nullopt;
  return d;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> c = a;
  c.terms.insert(c.terms.end(), b.terms.begin(), b.terms.end());
  normalize_poly(f, c);
  return c;
}

template <class F>
Poly<F> poly_scale(const F& f, const typename F::Elt& s, const Poly<F>& a) {
  Poly<F> c;
  if (f.is_zero(s)) return c;
  for (const auto& t : a.terms) c.terms.push_back({f.mul(s, t.first), t.second});
  return c;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> c;
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      c.terms.push_back({f.mul(ta.first, tb.first), mono_mul(ta.second, tb.second)});
  normalize_poly(f, c);
  return c;
}

template <class F>
Poly<F> poly_pow(const F& f, const Poly<F>& a, int e) {
  Poly<F> r;
  r.terms.push_back({f.one(), Monomial(a.terms.empty() ? 0 : a.terms[0].second.size(), 0)});
  for (int i = 0; i < e; ++i) r = poly_mul(f, r, a);
  return r;
}

struct ParseError {
  std::string message;
  std::size_t pos;  // offset into the parsed string
};

// Grammar:  poly  := [+-]? term ([+-] term)*
//           term  := integer | integer '*'? factors | factors
//           factors := var ('^' integer)? (('*')? var ('^' integer)?)*
// Whitespace is free. Unknown variable names and stray characters are errors.
inline PolyAst parse_poly(const std::string& src,
                          const std::vector<std::string>& vars) {
  PolyAst out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < src.size() && std::isspace((unsigned char)src[i])) ++i;
  };
  auto parse_int = [&]() -> long long {
    std::size_t start = i;
    long long v = 0;
    while (i < src.size() && std::isdigit((unsigned char)src[i])) {
      v = v * 10 + (src[i] - '0');
      if (v > (1LL << 40)) throw ParseError{"coefficient too large", start};
      ++i;
    }
    if (i == start) throw ParseError{"expected an integer", i};
    return v;
  };
  auto match_var = [&]() -> int {
    // longest variable name that matches at position i
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::string& name = vars[v];
      if (name.size() > best_len && src.compare(i, name.size(), name) == 0) {
        best = (int)v;
        best_len = name.size();
      }
    }
    if (best >= 0) i += best_len;
    return best;
  };

  skip_ws();
  if (i == src.size()) throw ParseError{"empty polynomial", i};
  bool first = true;
  while (true) {
    skip_ws();
    if (i == src.size()) break;
    long long coef_sign = 1;
    if (src[i] == '+' || src[i] == '-') {
      coef_sign = src[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError{"expected '+' or '-' between terms", i};
    }
    first = false;

    long long coef = coef_sign;
    bool saw_number = false;
    if (i < src.size() && std::isdigit((unsigned char)src[i])) {
      coef = coef_sign * parse_int();
      saw_number = true;
      skip_ws();
      if (i < src.size() && src[i] == '*') {
        ++i;
        skip_ws();
      }
    }

    Monomial mono(vars.size(), 0);
    bool saw_var = false;
    while (true) {
      skip_ws();
      std::size_t save = i;
      int v = i < src.size() ? match_var() : -1;
      if (v < 0) {
        i = save;
        break;
      }
      saw_var = true;
      int exp = 1;
      skip_ws();
      if (i < src.size() && src[i] == '^') {
        ++i;
        skip_ws();
        long long e = parse_int();
        if (e < 0 || e > 64) throw ParseError{"bad exponent", i};
        exp = (int)e;
      }
      mono[v] += exp;
      skip_ws();
      if (i < src.size() && src[i] == '*') {
        ++i;
        continue;
      }
      // juxtaposition without '*' is also accepted; loop and try another var
    }
    if (!saw_var && !saw_number)
      throw ParseError{"expected a coefficient or a variable", i};
    out.terms.push_back({coef, mono});
    skip_ws();
    if (i < src.size() && src[i] != '+' && src[i] != '-')
      throw ParseError{std::string("unexpected character '") + src[i] + "'", i};
  }
  normalize_poly(out, [](long long c) { return c == 0; }, 0LL);
  return out;
}

inline std::string mono_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

// Printing uses balanced representatives over GF(p) so -1 prints as -1.
inline long long coeff_display(const GfpField& f, GfpField::Elt c) {
  return f.lift_balanced(c);
}
inline Rational coeff_display(const RatField&, const Rational& c) { return c; }

template <class F>
std::string poly_str(const F& f, const Poly<F>& p,
                     const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [c, m] : p.terms) {
    auto disp = coeff_display(f, c);
    bool neg = disp < 0;
    auto mag = neg ? -disp : disp;
    std::string coef_str;
    if constexpr (std::is_same_v<F, RatField>)
      coef_str = rational_str(Rational(mag));
    else
      coef_str = std::to_string((long long)mag);
    std::string mono = mono_str(m, vars);
    std::string body;
    if (mono == "1")
      body = coef_str;
    else if (coef_str == "1")
      body = mono;
    else
      body = coef_str + "*" + mono;
    if (s.empty())
      s = (neg ? "-" : "") + body;
    else
      s += (neg ? " - " : " + ") + body;
  }
  return s;
}

}  // namespace syz
