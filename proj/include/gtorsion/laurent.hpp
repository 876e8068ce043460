#pragma once

// Integer Laurent polynomials in t, and positive real root detection by
// Sturm sequences over exact integers.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/smith.hpp"

namespace gtorsion {

class LaurentPoly {
 public:
  LaurentPoly() = default;

  // c t^e
  static LaurentPoly monomial(BigInt const& c, long e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly constant(BigInt const& c) { return monomial(c, 0); }

  // t^e - 1
  static LaurentPoly t_pow_minus_one(long e) {
    return monomial(1, e) - constant(1);
  }

  std::map<long, BigInt> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  long min_exponent() const { return nonzero().begin()->first; }
  long max_exponent() const { return nonzero().rbegin()->first; }
  BigInt const& leading_coefficient() const { return nonzero().rbegin()->second; }

  void add_term(long e, BigInt const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  LaurentPoly& operator+=(LaurentPoly const& o) {
    for (auto const& [e, c] : o.terms_) {
      add_term(e, c);
    }
    return *this;
  }

  LaurentPoly& operator-=(LaurentPoly const& o) {
    for (auto const& [e, c] : o.terms_) {
      add_term(e, -c);
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly p;
    for (auto const& [e, c] : terms_) {
      p.terms_.emplace(e, -c);
    }
    return p;
  }

  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly p;
    for (auto const& [e1, c1] : a.terms_) {
      for (auto const& [e2, c2] : b.terms_) {
        p.add_term(e1 + e2, c1 * c2);
      }
    }
    return p;
  }

  // t^k * p
  LaurentPoly shift(long k) const {
    LaurentPoly p;
    for (auto const& [e, c] : terms_) {
      p.terms_.emplace(e + k, c);
    }
    return p;
  }

  // p(1/t)
  LaurentPoly reverse() const {
    LaurentPoly p;
    for (auto const& [e, c] : terms_) {
      p.terms_.emplace(-e, c);
    }
    return p;
  }

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (auto const& [e, c] : terms_) {
      s += c;
    }
    return s;
  }

  // Representative of p up to units +-t^k: lowest exponent 0 and positive
  // constant term. Zero stays zero.
  LaurentPoly normalized() const {
    if (is_zero()) {
      return {};
    }
    LaurentPoly p = shift(-min_exponent());
    return p.coefficient(0) < 0 ? -p : p;
  }

  bool operator==(LaurentPoly const&) const = default;

 private:
  std::map<long, BigInt> const& nonzero() const {
    if (terms_.empty()) {
      throw DomainError("zero polynomial has no degree");
    }
    return terms_;
  }

  std::map<long, BigInt> terms_;
};

inline bool equal_up_to_units(LaurentPoly const& a, LaurentPoly const& b) {
  return a.normalized() == b.normalized();
}

// Exact quotient a / b; throws unless b divides a in Z[t, 1/t].
inline LaurentPoly exact_divide(LaurentPoly a, LaurentPoly const& b) {
  if (b.is_zero()) {
    throw DomainError("division by the zero polynomial");
  }
  LaurentPoly q;
  long const db = b.max_exponent();
  long const span_b = db - b.min_exponent();
  BigInt const& lb = b.leading_coefficient();
  while (!a.is_zero() && a.max_exponent() - a.min_exponent() >= span_b) {
    BigInt const& la = a.leading_coefficient();
    if (la % lb != 0) {
      throw DomainError("inexact division: leading coefficients");
    }
    auto term = LaurentPoly::monomial(la / lb, a.max_exponent() - db);
    q += term;
    a -= term * b;
  }
  if (!a.is_zero()) {
    throw DomainError("inexact division: non-zero remainder");
  }
  return q;
}

// Canonical text: descending exponents, "t^8 - t^7 + 3t^2 - t + 1",
// negative exponents as "t^-2", "0" for the zero polynomial.
inline std::string format_laurent(LaurentPoly const& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto const& [e, c] = *it;
    bool const neg = c < 0;
    BigInt const mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) {
      out += mag.str();
    }
    out += "t";
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

inline LaurentPoly parse_laurent(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
  };
  auto digits = [&](std::string& into) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      into += text[pos++];
    }
  };

  LaurentPoly p;
  bool first = true;
  skip_ws();
  if (pos == text.size()) {
    throw ParseError("empty polynomial", 0);
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    std::size_t const term_start = pos;
    std::string coef;
    digits(coef);
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    long e = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string ex;
        if (pos < text.size() && text[pos] == '-') {
          ex += '-';
          ++pos;
        }
        std::size_t const at = pos;
        digits(ex);
        if (ex.empty() || ex == "-") {
          throw ParseError("expected an exponent", at);
        }
        if (ex.size() > 12) {
          throw ParseError("exponent out of range", at);
        }
        e = std::stol(ex);
      }
    } else if (coef.empty()) {
      throw ParseError("expected a coefficient or 't'", term_start);
    }
    BigInt c = coef.empty() ? BigInt(1) : BigInt(coef);
    p.add_term(e, sign * c);
    first = false;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace detail {

// Dense integer polynomial, coefficient of t^i at index i, no trailing zeros.
using DensePoly = std::vector<BigInt>;

inline void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

inline int sign_of(BigInt const& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline DensePoly derivative(DensePoly const& p) {
  DensePoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  trim(d);
  return d;
}

// lc(b)^(deg a - deg b + 1) * a mod b
inline DensePoly pseudo_remainder(DensePoly a, DensePoly const& b) {
  std::size_t const db = b.size() - 1;
  BigInt const& lb = b.back();
  long steps = static_cast<long>(a.size()) - static_cast<long>(db);
  while (a.size() > db && !a.empty()) {
    BigInt const la = a.back();
    std::size_t const shift = a.size() - 1 - db;
    for (auto& c : a) {
      c *= lb;
    }
    for (std::size_t i = 0; i <= db; ++i) {
      a[i + shift] -= la * b[i];
    }
    trim(a);
    --steps;
  }
  // Pad to the full power so the sign of the multiplier is lc(b)^(da-db+1).
  for (; steps > 0; --steps) {
    for (auto& c : a) {
      c *= lb;
    }
  }
  return a;
}

inline BigInt content(DensePoly const& p) {
  BigInt g = 0;
  for (auto const& c : p) {
    g = gcd(g, c);
  }
  return g < 0 ? BigInt(-g) : g;
}

inline DensePoly primitive(DensePoly p) {
  BigInt const g = content(p);
  if (g > 1) {
    for (auto& c : p) {
      c /= g;
    }
  }
  return p;
}

// Sturm chain p0 = p, p1 = p', p_{k+1} = -(positive multiple of p_{k-1} mod p_k).
inline std::vector<DensePoly> sturm_chain(DensePoly const& p) {
  std::vector<DensePoly> chain{p, derivative(p)};
  trim(chain.back());
  if (chain.back().empty()) {
    chain.pop_back();
    return chain;
  }
  while (true) {
    auto const& a = chain[chain.size() - 2];
    auto const& b = chain.back();
    if (b.size() == 1) {
      break;
    }
    DensePoly r = pseudo_remainder(a, b);
    if (r.empty()) {
      break;
    }
    // prem = lc(b)^k * rem with k = deg a - deg b + 1; undo the sign.
    long const k = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    int const mult_sign = (sign_of(b.back()) < 0 && k % 2 != 0) ? -1 : 1;
    r = primitive(std::move(r));
    if (mult_sign > 0) {
      for (auto& c : r) {
        c = -c;
      }
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int variations(std::vector<int> const& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++v;
    }
    last = s;
  }
  return v;
}

}  // namespace detail

// Number of distinct roots in (0, +inf).
inline int count_positive_real_roots(LaurentPoly const& p) {
  if (p.is_zero()) {
    throw DomainError("zero polynomial");
  }
  detail::DensePoly dense(
      static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), 0);
  for (auto const& [e, c] : p.terms()) {
    dense[static_cast<std::size_t>(e - p.min_exponent())] = c;
  }
  auto const chain = detail::sturm_chain(dense);
  std::vector<int> at_zero, at_inf;
  for (auto const& q : chain) {
    // Sign just right of 0 is the sign of the lowest non-zero coefficient.
    int s0 = 0;
    for (auto const& c : q) {
      if (c != 0) {
        s0 = detail::sign_of(c);
        break;
      }
    }
    at_zero.push_back(s0);
    at_inf.push_back(detail::sign_of(q.back()));
  }
  return detail::variations(at_zero) - detail::variations(at_inf);
}

inline bool has_positive_real_root(LaurentPoly const& p) {
  return count_positive_real_roots(p) > 0;
}

}  // namespace gtorsion
