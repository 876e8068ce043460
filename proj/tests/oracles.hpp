#pragma once

// Test-side reference implementations. They share no code with the library
// beyond converting to and from its types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtorsion/word.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

// Words as signed integers: generator k is k+1, its inverse -(k+1).
using Raw = std::vector<int>;

// Cancels adjacent inverse pairs until none is left, rescanning from the start.
inline Raw reduce(Raw w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Raw cat(Raw a, Raw const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Raw inv(Raw w) {
  std::reverse(w.begin(), w.end());
  for (int& x : w) {
    x = -x;
  }
  return w;
}

inline Raw power(Raw const& w, long k) {
  Raw out;
  Raw const base = k < 0 ? inv(w) : w;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) {
    out = cat(out, base);
  }
  return out;
}

// x^-1 y^-1 x y
inline Raw comm(Raw const& x, Raw const& y) {
  return reduce(cat(cat(cat(inv(x), inv(y)), x), y));
}

// g^-1 x g
inline Raw conj(Raw const& x, Raw const& g) { return reduce(cat(cat(inv(g), x), g)); }

inline Raw random_raw(std::mt19937_64& rng, int rank, std::size_t max_len) {
  Raw w(rng() % (max_len + 1));
  for (int& x : w) {
    x = static_cast<int>(rng() % static_cast<unsigned>(rank)) + 1;
    if (rng() % 2 == 0) {
      x = -x;
    }
  }
  return w;
}

inline gtorsion::Word to_word(Raw const& w, std::vector<std::string> const& names) {
  std::vector<gtorsion::Letter> letters;
  for (int x : w) {
    letters.emplace_back(gtorsion::Generator(names[static_cast<std::size_t>(std::abs(x) - 1)]),
                         x > 0 ? 1 : -1);
  }
  return gtorsion::Word(letters);
}

inline Raw from_word(gtorsion::Word const& w, std::vector<std::string> const& names) {
  Raw out;
  for (auto const& l : w) {
    auto it = std::find(names.begin(), names.end(), l.gen().name());
    int const k = static_cast<int>(it - names.begin()) + 1;
    out.push_back(l.sign() * k);
  }
  return out;
}

// Braid closures: compose the transpositions on an array of strand
// positions, then count cycles with a visited list.
inline int closure_cycles(int strands, std::vector<int> const& indices) {
  std::vector<int> pos(static_cast<std::size_t>(strands));
  std::iota(pos.begin(), pos.end(), 0);
  for (int i : indices) {
    for (int& p : pos) {
      if (p == i - 1) {
        p = i;
      } else if (p == i) {
        p = i - 1;
      }
    }
  }
  std::vector<bool> seen(pos.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < pos.size(); ++s) {
    if (seen[s]) {
      continue;
    }
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(pos[t])) {
      seen[t] = true;
    }
  }
  return cycles;
}

// Determinant by cofactor expansion (small matrices only).
inline Big det(std::vector<std::vector<Big>> const& m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m[0][0];
  }
  Big total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) {
      continue;
    }
    std::vector<std::vector<Big>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Big> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) {
          row.push_back(m[r][k]);
        }
      }
      minor.push_back(std::move(row));
    }
    Big const term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Big(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Big> torsion;  // invariant factors > 1
};

// Abelian group Z^cols / rowspace(m) from determinantal divisors:
// d_k = gcd of all k x k minors, invariant factors d_k / d_{k-1}.
inline AbelianGroup abelian_group(std::vector<std::vector<Big>> const& m,
                                  std::size_t cols) {
  std::size_t const rows = m.size();
  std::vector<Big> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Big g = 0;
    for (auto const& r : rs) {
      for (auto const& c : cs) {
        std::vector<std::vector<Big>> sub;
        for (auto i : r) {
          std::vector<Big> row;
          for (auto j : c) {
            row.push_back(m[i][j]);
          }
          sub.push_back(std::move(row));
        }
        g = gcd(g, det(sub));
      }
    }
    if (g == 0) {
      break;
    }
    d.push_back(g < 0 ? Big(-g) : g);
  }
  AbelianGroup out;
  std::size_t const rank = d.size() - 1;
  out.free_rank = cols - rank;
  for (std::size_t k = 1; k <= rank; ++k) {
    Big const f = d[k] / d[k - 1];
    if (f > 1) {
      out.torsion.push_back(f);
    }
  }
  return out;
}

// Dense polynomials over the rationals, coefficient of t^i at index i.
using Rat = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rat>;

inline void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

inline RPoly rem(RPoly a, RPoly const& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat const f = a.back() / b.back();
    std::size_t const shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] -= f * b[i];
    }
    trim(a);
  }
  return a;
}

inline int sgn(Rat const& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Distinct roots in (0, inf) by the textbook Sturm chain over Q.
inline int positive_roots(std::vector<long> const& coeffs) {
  RPoly p(coeffs.begin(), coeffs.end());
  trim(p);
  std::size_t low = 0;
  while (p[low] == 0) {
    ++low;
  }
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  std::vector<RPoly> chain{p};
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  trim(d);
  if (!d.empty()) {
    chain.push_back(d);
  }
  while (chain.size() >= 2 && chain.back().size() > 1) {
    RPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) {
      break;
    }
    for (auto& c : r) {
      c = -c;
    }
    chain.push_back(r);
  }
  auto variations = [](std::vector<int> const& s) {
    int v = 0, last = 0;
    for (int x : s) {
      if (x != 0) {
        v += (last != 0 && x != last) ? 1 : 0;
        last = x;
      }
    }
    return v;
  };
  std::vector<int> at0, atinf;
  for (auto const& q : chain) {
    int s0 = 0;
    for (auto const& c : q) {
      if (c != 0) {
        s0 = sgn(c);
        break;
      }
    }
    at0.push_back(s0);
    atinf.push_back(sgn(q.back()));
  }
  return variations(at0) - variations(atinf);
}

// Integer polynomials in t, coefficient of t^i at index i.
using ZPoly = std::vector<Big>;

inline ZPoly ztrim(ZPoly p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
  return p;
}

inline ZPoly zadd(ZPoly a, ZPoly const& b, int sign = 1) {
  if (a.size() < b.size()) {
    a.resize(b.size());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] += sign * b[i];
  }
  return ztrim(a);
}

inline ZPoly zmul(ZPoly const& a, ZPoly const& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return ztrim(out);
}

// Exact division; returns an empty optional-like flag through `ok`.
inline ZPoly zdiv(ZPoly a, ZPoly const& b, bool& ok) {
  a = ztrim(a);
  ok = true;
  if (a.empty()) {
    return {};
  }
  if (a.size() < b.size()) {
    ok = false;
    return {};
  }
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Big const top = a[k + b.size() - 1];
    if (top % b.back() != 0) {
      ok = false;
      return {};
    }
    q[k] = top / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[k + i] -= q[k] * b[i];
    }
  }
  ok = ztrim(a).empty();
  return ztrim(q);
}

// Fraction-free Gaussian elimination (Bareiss) over Z[t].
inline ZPoly zdet(std::vector<std::vector<ZPoly>> m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return {1};
  }
  int sign = 1;
  ZPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ztrim(m[k][k]).empty()) {
      std::size_t r = k + 1;
      while (r < n && ztrim(m[r][k]).empty()) {
        ++r;
      }
      if (r == n) {
        return {};
      }
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        bool ok = false;
        m[i][j] = zdiv(zadd(zmul(m[i][j], m[k][k]), zmul(m[i][k], m[k][j]), -1), prev, ok);
        if (!ok) {
          throw std::logic_error("inexact Bareiss step");
        }
      }
    }
    prev = m[k][k];
  }
  ZPoly d = ztrim(m[n - 1][n - 1]);
  if (sign < 0) {
    for (auto& c : d) {
      c = -c;
    }
  }
  return d;
}

// Reduced Burau matrix of s_i (1-based) on n strands.
inline std::vector<std::vector<ZPoly>> burau(int n, int i) {
  std::size_t const d = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<ZPoly>> m(d, std::vector<ZPoly>(d));
  for (std::size_t k = 0; k < d; ++k) {
    m[k][k] = {1};
  }
  std::size_t const r = static_cast<std::size_t>(i - 1);
  m[r][r] = {0, -1};
  if (r > 0) {
    m[r][r - 1] = {0, 1};
  }
  if (r + 1 < d) {
    m[r][r + 1] = {1};
  }
  return m;
}

inline std::vector<std::vector<ZPoly>> zmatmul(std::vector<std::vector<ZPoly>> const& a,
                                               std::vector<std::vector<ZPoly>> const& b) {
  std::size_t const d = a.size();
  std::vector<std::vector<ZPoly>> out(d, std::vector<ZPoly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].empty()) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        out[i][j] = zadd(out[i][j], zmul(a[i][k], b[k][j]));
      }
    }
  }
  return out;
}

// Alexander polynomial of the closure of a positive braid word, from
//   (1 - t^n) / (1 - t) * Delta = det(I - psi(beta)),
// normalized to lowest exponent 0 and positive constant term.
inline ZPoly burau_alexander(int n, std::vector<int> const& indices) {
  std::size_t const d = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<ZPoly>> m(d, std::vector<ZPoly>(d));
  for (std::size_t k = 0; k < d; ++k) {
    m[k][k] = {1};
  }
  for (int i : indices) {
    m = zmatmul(m, burau(n, i));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (auto& c : m[i][j]) {
        c = -c;
      }
    }
    m[i][i] = zadd(m[i][i], {1});
  }
  ZPoly const det = zdet(m);
  ZPoly geometric(static_cast<std::size_t>(n), Big(1));
  bool ok = false;
  ZPoly delta = zdiv(det, geometric, ok);
  if (!ok || delta.empty()) {
    throw std::logic_error("Burau determinant not divisible");
  }
  std::size_t low = 0;
  while (delta[low] == 0) {
    ++low;
  }
  delta.erase(delta.begin(), delta.begin() + static_cast<long>(low));
  if (delta[0] < 0) {
    for (auto& c : delta) {
      c = -c;
    }
  }
  return delta;
}

}  // namespace oracle
