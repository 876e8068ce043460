#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gtorsion/error.hpp"

namespace gtorsion {

// Permutation of {0, ..., n-1} in one-line notation, acting on the right:
// (p * q)(i) = q(p(i)), so p is applied first. Text forms are 1-based.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[x]) {
        throw DomainError("not a permutation");
      }
      hit[x] = true;
    }
  }

  static Permutation from_one_based(std::vector<int> const& images) {
    std::vector<int> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      zero[i] = images[i] - 1;
    }
    return Permutation(std::move(zero));
  }

  // The transposition of i and j (0-based).
  static Permutation transposition(std::size_t degree, std::size_t i,
                                   std::size_t j) {
    Permutation p(degree);
    std::swap(p.images_[i], p.images_[j]);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  std::vector<int> const& images() const noexcept { return images_; }

  std::vector<int> one_based() const {
    std::vector<int> out(images_);
    for (int& x : out) {
      ++x;
    }
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  Permutation inverse() const {
    Permutation p(degree());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      p.images_[images_[i]] = static_cast<int>(i);
    }
    return p;
  }

  friend Permutation operator*(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw DomainError("permutation degree mismatch");
    }
    Permutation r(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) {
      r.images_[i] = q.images_[p.images_[i]];
    }
    return r;
  }

  // Cycle lengths in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
  }

  std::size_t cycle_count() const { return cycle_type().size(); }

  // Disjoint-cycle notation, 1-based, fixed points omitted; "()" for the
  // identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (out.back() != '(') {
          out += ' ';
        }
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  auto operator<=>(Permutation const&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace gtorsion
