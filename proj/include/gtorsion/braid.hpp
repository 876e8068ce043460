#pragma once

// Braids in the standard generators s1, ..., s_{n-1}, their permutations and
// the closure invariants used for the knot families: component count,
// genus of a positive braid knot closure, and linking number with the axis.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/permutation.hpp"

namespace gtorsion {

struct BraidLetter {
  int index;  // 1-based, s_index swaps strands index and index + 1
  int sign;   // +1 or -1
  bool operator==(BraidLetter const&) const = default;
};

class Braid {
 public:
  Braid(int strands, std::vector<BraidLetter> word)
      : strands_(strands), word_(std::move(word)) {
    if (strands_ < 2) {
      throw DomainError("a braid needs at least 2 strands");
    }
    for (auto const& l : word_) {
      if (l.index < 1 || l.index >= strands_) {
        throw DomainError("generator s" + std::to_string(l.index)
                          + " out of range for " + std::to_string(strands_)
                          + " strands");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw DomainError("braid letter sign must be +1 or -1");
      }
    }
  }

  int strands() const noexcept { return strands_; }
  std::vector<BraidLetter> const& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  long exponent_sum() const noexcept {
    long e = 0;
    for (auto const& l : word_) {
      e += l.sign;
    }
    return e;
  }

  bool is_positive() const noexcept {
    for (auto const& l : word_) {
      if (l.sign < 0) {
        return false;
      }
    }
    return true;
  }

  friend Braid operator*(Braid const& x, Braid const& y) {
    if (x.strands_ != y.strands_) {
      throw DomainError("strand counts differ");
    }
    auto w = x.word_;
    w.insert(w.end(), y.word_.begin(), y.word_.end());
    return Braid(x.strands_, std::move(w));
  }

  bool operator==(Braid const&) const = default;

 private:
  int strands_;
  std::vector<BraidLetter> word_;
};

inline Permutation braid_permutation(Braid const& b) {
  auto const n = static_cast<std::size_t>(b.strands());
  Permutation p(n);
  for (auto const& l : b.word()) {
    p = p * Permutation::transposition(n, static_cast<std::size_t>(l.index - 1),
                                       static_cast<std::size_t>(l.index));
  }
  return p;
}

inline int closure_components(Braid const& b) {
  return static_cast<int>(braid_permutation(b).cycle_count());
}

// Genus of the closure of a positive braid whose closure is a knot:
// (1 - strands + length) / 2, by Seifert's algorithm on the closed diagram.
inline long positive_braid_genus(Braid const& b) {
  if (!b.is_positive()) {
    throw DomainError("braid is not positive");
  }
  if (closure_components(b) != 1) {
    throw DomainError("braid closure has "
                      + std::to_string(closure_components(b))
                      + " components, not a knot");
  }
  long const twice = 1 - b.strands() + static_cast<long>(b.length());
  // A knot closure forces length = strands - 1 (mod 2).
  if (twice < 0 || twice % 2 != 0) {
    throw DomainError("genus formula is not a non-negative integer");
  }
  return twice / 2;
}

// Every strand crosses the axis disk once, all oriented the same way.
inline int axis_linking_number(Braid const& b) { return b.strands(); }

// (s1 s2 ... s_{2q+n+1})(s1 s2 ... s_{2q}) on 2q+n+2 strands; its closure is
// the (2, 2q+1) torus knot and the braid axis is c_n.
inline Braid preset_kq_braid(int q, int n) {
  if (q < 1 || n < 1) {
    throw DomainError("K_q braid requires q >= 1 and n >= 1");
  }
  std::vector<BraidLetter> w;
  for (int i = 1; i <= 2 * q + n + 1; ++i) {
    w.push_back({i, 1});
  }
  for (int i = 1; i <= 2 * q; ++i) {
    w.push_back({i, 1});
  }
  return Braid(2 * q + n + 2, std::move(w));
}

// (s1 ... s_{p(m+1)})^(pm+1) s1^(2s) on p(m+1)+1 strands, a positive braid
// for K(p(m+1)+1, pm+1; 2, s) of word length p(m+1)(pm+1) + 2s.
inline Braid preset_twisted_torus_braid(int p, int m, int s) {
  if (p < 2 || m < 1 || s < 0) {
    throw DomainError("twisted torus braid requires p >= 2, m >= 1, s >= 0");
  }
  int const r = p * (m + 1);
  std::vector<BraidLetter> w;
  for (int k = 0; k < p * m + 1; ++k) {
    for (int i = 1; i <= r; ++i) {
      w.push_back({i, 1});
    }
  }
  for (int k = 0; k < 2 * s; ++k) {
    w.push_back({1, 1});
  }
  return Braid(r + 1, std::move(w));
}

// Text form: "@5 s1 s2 s3^-1", powers allowed ("s1^3"). Without the "@n"
// prefix the strand count is one more than the largest index (at least 2).
inline Braid parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'
                                 || text[pos] == '\n' || text[pos] == '\r')) {
      ++pos;
    }
  };
  auto number = [&](bool allow_sign) {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
      throw ParseError("expected a number", pos);
    }
    long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) {
        throw ParseError("number out of range", start);
      }
      ++pos;
    }
    return static_cast<int>(neg ? -v : v);
  };

  skip_ws();
  int strands = 0;
  if (pos < text.size() && text[pos] == '@') {
    ++pos;
    strands = number(false);
  }
  std::vector<BraidLetter> w;
  int max_index = 0;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) {
      break;
    }
    if (text[pos] != 's') {
      throw ParseError(std::string("expected 's', found '") + text[pos] + "'", pos);
    }
    ++pos;
    std::size_t at = pos;
    int idx = number(false);
    if (idx < 1) {
      throw ParseError("generator index must be positive", at);
    }
    int power = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      power = number(true);
    }
    for (int k = 0; k < (power < 0 ? -power : power); ++k) {
      w.push_back({idx, power < 0 ? -1 : 1});
    }
    max_index = std::max(max_index, idx);
  }
  if (strands == 0) {
    strands = std::max(2, max_index + 1);
  }
  if (max_index >= strands) {
    throw ParseError("generator s" + std::to_string(max_index) + " needs more than "
                         + std::to_string(strands) + " strands",
                     0);
  }
  return Braid(strands, std::move(w));
}

// Canonical text: "@n" followed by maximal powers, e.g. "@5 s1 s2^2 s3^-1".
inline std::string format_braid(Braid const& b) {
  std::string out = "@" + std::to_string(b.strands());
  auto const& w = b.word();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    long power = static_cast<long>(j - i) * w[i].sign;
    out += " s" + std::to_string(w[i].index);
    if (power != 1) {
      out += "^" + std::to_string(power);
    }
    i = j;
  }
  return out;
}

}  // namespace gtorsion
