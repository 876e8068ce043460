#pragma once

// Exact free-group arithmetic. A Word is always stored freely reduced, so
// equality of group elements is equality of letter sequences.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gtorsion/error.hpp"

namespace gtorsion {

class Generator {
 public:
  explicit Generator(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) {
      throw DomainError("invalid generator name '" + name_ + "'");
    }
  }

  std::string const& name() const noexcept { return name_; }

  // letter { letter | digit | '_' }
  static bool valid_name(std::string_view s) noexcept {
    if (s.empty() || !is_alpha(s.front())) {
      return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
      return is_alpha(c) || (c >= '0' && c <= '9') || c == '_';
    });
  }

  auto operator<=>(Generator const&) const = default;

 private:
  static bool is_alpha(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }

  std::string name_;
};

class Letter {
 public:
  Letter(Generator gen, int sign) : gen_(std::move(gen)), sign_(sign) {
    if (sign != 1 && sign != -1) {
      throw DomainError("letter sign must be +1 or -1");
    }
  }

  Generator const& gen() const noexcept { return gen_; }
  int sign() const noexcept { return sign_; }

  Letter inverse() const { return Letter(gen_, -sign_); }

  bool cancels(Letter const& other) const noexcept {
    return sign_ == -other.sign_ && gen_ == other.gen_;
  }

  auto operator<=>(Letter const&) const = default;

 private:
  Generator gen_;
  int sign_;
};

// Ordered list of distinct generators.
class Alphabet {
 public:
  Alphabet() = default;

  Alphabet(std::initializer_list<std::string_view> names) {
    for (auto n : names) {
      add(Generator(std::string(n)));
    }
  }

  explicit Alphabet(std::vector<Generator> gens) {
    for (auto& g : gens) {
      add(std::move(g));
    }
  }

  void add(Generator g) {
    if (contains(g)) {
      throw DomainError("duplicate generator '" + g.name() + "'");
    }
    gens_.push_back(std::move(g));
  }

  // Adds g unless it is already present.
  void insert(Generator const& g) {
    if (!contains(g)) {
      gens_.push_back(g);
    }
  }

  bool contains(Generator const& g) const {
    return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
  }

  std::optional<std::size_t> index_of(Generator const& g) const {
    auto it = std::find(gens_.begin(), gens_.end(), g);
    if (it == gens_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - gens_.begin());
  }

  std::vector<Generator> const& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  Generator const& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  bool operator==(Alphabet const&) const = default;

 private:
  std::vector<Generator> gens_;
};

class Word {
 public:
  Word() = default;

  explicit Word(std::span<Letter const> raw) : letters_(reduce_letters(raw)) {}

  Word(std::initializer_list<Letter> raw)
      : Word(std::span<Letter const>(raw.begin(), raw.size())) {}

  static Word of(Generator const& g, int sign = 1) {
    Word w;
    w.letters_.emplace_back(g, sign);
    return w;
  }

  static Word of(std::string_view name, int sign = 1) {
    return of(Generator(std::string(name)), sign);
  }

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  Word pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word result;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
      result = result * base;
    }
    return result;
  }

  // Subword of letters [first, first + count).
  Word slice(std::size_t first, std::size_t count) const {
    return Word(std::span<Letter const>(letters_).subspan(first, count));
  }

  friend Word operator*(Word const& u, Word const& v) {
    // Only the junction can cancel, both factors being reduced.
    std::size_t k = 0;
    while (k < u.size() && k < v.size()
           && u.letters_[u.size() - 1 - k].cancels(v.letters_[k])) {
      ++k;
    }
    Word w;
    w.letters_.reserve(u.size() + v.size() - 2 * k);
    w.letters_.insert(w.letters_.end(), u.letters_.begin(),
                      u.letters_.end() - static_cast<std::ptrdiff_t>(k));
    w.letters_.insert(w.letters_.end(),
                      v.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                      v.letters_.end());
    return w;
  }

  Word& operator*=(Word const& v) { return *this = *this * v; }

  auto operator<=>(Word const&) const = default;

  // Left-to-right stack reduction.
  static std::vector<Letter> reduce_letters(std::span<Letter const> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (auto const& l : raw) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

 private:
  std::vector<Letter> letters_;
};

inline Word reduce(std::span<Letter const> raw) { return Word(raw); }

inline Word multiply(Word const& u, Word const& v) { return u * v; }

inline Word inverse(Word const& u) { return u.inverse(); }

// x^g = g^-1 x g
inline Word conjugate(Word const& x, Word const& g) {
  return g.inverse() * x * g;
}

// [x, y] = x^-1 y^-1 x y
inline Word commutator(Word const& x, Word const& y) {
  return x.inverse() * y.inverse() * x * y;
}

inline long exponent_sum(Word const& u, Generator const& g) {
  long sum = 0;
  for (auto const& l : u) {
    if (l.gen() == g) {
      sum += l.sign();
    }
  }
  return sum;
}

// Generators occurring in u, in order of first appearance.
inline Alphabet support(Word const& u) {
  Alphabet a;
  for (auto const& l : u) {
    a.insert(l.gen());
  }
  return a;
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// u == conjugator * core * conjugator^-1 with core cyclically reduced.
inline CyclicReduction cyclic_reduce(Word const& u) {
  auto const& ls = u.letters();
  std::size_t k = 0;
  while (2 * k + 1 < ls.size() && ls[k].cancels(ls[ls.size() - 1 - k])) {
    ++k;
  }
  return {u.slice(k, ls.size() - 2 * k), u.slice(0, k)};
}

// Rotation taking the first r letters to the end; u must be cyclically
// reduced for the result to stay reduced.
inline Word rotate_left(Word const& u, std::size_t r) {
  if (u.is_identity()) {
    return u;
  }
  r %= u.size();
  std::vector<Letter> ls(u.begin(), u.end());
  std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r),
              ls.end());
  return Word(ls);
}

// Some g with conjugate(u, g) == v, or nullopt when u and v are not
// conjugate in the free group. Rotations of the cyclic core are tried in
// increasing order and the first match wins.
inline std::optional<Word> free_conjugate(Word const& u, Word const& v) {
  auto const cu = cyclic_reduce(u);
  auto const cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) {
    return std::nullopt;
  }
  if (cu.core.is_identity()) {
    return Word();
  }
  auto const& U = cu.core.letters();
  auto const& V = cv.core.letters();
  std::size_t const n = U.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = U[(r + i) % n] == V[i];
    }
    if (match) {
      // rot_r(U) = P^-1 U P with P the first r letters of U.
      return cu.conjugator * cu.core.slice(0, r) * cv.conjugator.inverse();
    }
  }
  return std::nullopt;
}

// Representative of the conjugacy class of u or u^-1: the least rotation of
// the cyclic cores of both.
inline Word cyclic_normal_form(Word const& u) {
  Word best;
  bool first = true;
  for (auto const& w : {cyclic_reduce(u).core, cyclic_reduce(u.inverse()).core}) {
    for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
      Word candidate = rotate_left(w, r);
      if (first || candidate < best) {
        best = std::move(candidate);
        first = false;
      }
    }
  }
  return best;
}

}  // namespace gtorsion
