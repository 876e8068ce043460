#pragma once

// Homomorphisms from a finitely presented group onto permutation groups,
// used to certify that two elements do not commute (and so that their
// commutator is non-trivial) in the presented group.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/permutation.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

inline constexpr int kDefaultMaxDegree = 7;
inline constexpr int kMaxSearchDegree = 9;
inline constexpr std::size_t kMaxSearchGenerators = 3;

struct HomWitness {
  std::size_t degree = 0;
  // One image per generator, in the presentation's generator order.
  std::vector<std::pair<Generator, Permutation>> images;
  // The recorded claim: the images of u and v do not commute.
  Word u;
  Word v;

  Permutation const* image_of(Generator const& g) const {
    for (auto const& [gen, perm] : images) {
      if (gen == g) {
        return &perm;
      }
    }
    return nullptr;
  }

  std::string purpose() const {
    return "images of " + format_word(u) + " and " + format_word(v)
           + " do not commute";
  }

  bool operator==(HomWitness const&) const = default;
};

// Image of w under the generator assignment; throws if a letter has no image.
inline Permutation evaluate(Word const& w, HomWitness const& wit) {
  Permutation acc(wit.degree);
  for (auto const& l : w) {
    auto const* p = wit.image_of(l.gen());
    if (p == nullptr) {
      throw DomainError("no image for generator '" + l.gen().name() + "'");
    }
    acc = acc * (l.sign() > 0 ? *p : p->inverse());
  }
  return acc;
}

struct HomCheck {
  bool ok = false;
  std::string diagnostic;
};

inline HomCheck check_hom(Presentation const& pres, HomWitness const& wit) {
  if (wit.degree == 0) {
    return {false, "degree must be positive"};
  }
  for (auto const& g : pres.generators()) {
    auto const* p = wit.image_of(g);
    if (p == nullptr) {
      return {false, "missing image for generator " + g.name()};
    }
    if (p->degree() != wit.degree) {
      return {false, "image of " + g.name() + " has the wrong degree"};
    }
  }
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    if (!evaluate(pres.relators()[i], wit).is_identity()) {
      return {false, "relator " + std::to_string(i) + " ("
                         + format_word(pres.relators()[i])
                         + ") is not mapped to the identity"};
    }
  }
  for (auto const* w : {&wit.u, &wit.v}) {
    for (auto const& l : *w) {
      if (!pres.generators().contains(l.gen())) {
        return {false, "claim word uses undeclared generator " + l.gen().name()};
      }
    }
  }
  auto const pu = evaluate(wit.u, wit);
  auto const pv = evaluate(wit.v, wit);
  if (pu * pv == pv * pu) {
    return {false, "images of " + format_word(wit.u) + " and "
                       + format_word(wit.v) + " commute"};
  }
  return {true, {}};
}

inline bool verify_hom(Presentation const& pres, HomWitness const& wit) {
  return check_hom(pres, wit).ok;
}

namespace detail {

// All permutations of {0..n-1} in lexicographic one-line order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// The lexicographically first permutation of each cycle type.
inline std::vector<std::vector<int>> cycle_type_representatives(
    std::vector<std::vector<int>> const& perms) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<std::size_t>> types;
  for (auto const& p : perms) {
    auto t = Permutation(p).cycle_type();
    if (std::find(types.begin(), types.end(), t) == types.end()) {
      types.push_back(std::move(t));
      out.push_back(p);
    }
  }
  return out;
}

class QuotientSearch {
 public:
  QuotientSearch(Presentation const& pres, Word const& u, Word const& v,
                 int degree)
      : pres_(pres), u_(u), v_(v), n_(degree) {
    ngens_ = pres.generators().size();
    // Letter code: 2*gen for g, 2*gen+1 for g^-1.
    for (auto const& r : pres.relators()) {
      std::vector<int> code;
      std::size_t last = 0;
      for (auto const& l : r) {
        auto idx = *pres.generators().index_of(l.gen());
        last = std::max(last, idx);
        code.push_back(static_cast<int>(2 * idx + (l.sign() > 0 ? 0 : 1)));
      }
      if (!code.empty()) {
        relators_by_depth_.resize(ngens_);
        relators_by_depth_[last].push_back(std::move(code));
      }
    }
    relators_by_depth_.resize(ngens_);
    images_.assign(2 * ngens_, std::vector<int>(static_cast<std::size_t>(n_)));
  }

  std::optional<HomWitness> run() {
    if (ngens_ == 0) {
      return std::nullopt;
    }
    perms_ = all_permutations(n_);
    auto reps = cycle_type_representatives(perms_);
    for (auto const& p : reps) {
      if (assign_and_recurse(0, p)) {
        return witness_;
      }
    }
    return std::nullopt;
  }

 private:
  bool assign_and_recurse(std::size_t depth, std::vector<int> const& p) {
    auto& fwd = images_[2 * depth];
    auto& inv = images_[2 * depth + 1];
    fwd = p;
    for (int i = 0; i < n_; ++i) {
      inv[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
    }
    for (auto const& code : relators_by_depth_[depth]) {
      if (!is_trivial(code)) {
        return false;
      }
    }
    if (depth + 1 == ngens_) {
      return check_claim();
    }
    for (auto const& q : perms_) {
      if (assign_and_recurse(depth + 1, q)) {
        return true;
      }
    }
    return false;
  }

  bool is_trivial(std::vector<int> const& code) const {
    for (int start = 0; start < n_; ++start) {
      int x = start;
      for (int c : code) {
        x = images_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
      }
      if (x != start) {
        return false;
      }
    }
    return true;
  }

  bool check_claim() {
    HomWitness w;
    w.degree = static_cast<std::size_t>(n_);
    for (std::size_t g = 0; g < ngens_; ++g) {
      w.images.emplace_back(pres_.generators()[g], Permutation(images_[2 * g]));
    }
    w.u = u_;
    w.v = v_;
    auto const pu = evaluate(u_, w);
    auto const pv = evaluate(v_, w);
    if (pu * pv == pv * pu) {
      return false;
    }
    witness_ = std::move(w);
    return true;
  }

  Presentation const& pres_;
  Word const& u_;
  Word const& v_;
  int n_;
  std::size_t ngens_ = 0;
  std::vector<std::vector<std::vector<int>>> relators_by_depth_;
  std::vector<std::vector<int>> images_;
  std::vector<std::vector<int>> perms_;
  HomWitness witness_;
};

}  // namespace detail

// Exhaustive search over degrees 2..max_degree for a homomorphism into the
// symmetric group under which u and v do not commute. Within a degree the
// first generator ranges over one representative per cycle type and the
// others over all permutations, each in lexicographic one-line order; the
// first witness in that order is returned.
inline std::optional<HomWitness> find_nonabelian_quotient(
    Presentation const& pres, Word const& u, Word const& v,
    int max_degree = kDefaultMaxDegree) {
  if (max_degree < 2 || max_degree > kMaxSearchDegree) {
    throw DomainError("max_degree must lie in 2.." + std::to_string(kMaxSearchDegree));
  }
  if (pres.generators().size() > kMaxSearchGenerators) {
    throw DomainError("quotient search supports at most "
                      + std::to_string(kMaxSearchGenerators) + " generators");
  }
  for (auto const* w : {&u, &v}) {
    for (auto const& l : *w) {
      if (!pres.generators().contains(l.gen())) {
        throw DomainError("word uses undeclared generator '" + l.gen().name() + "'");
      }
    }
  }
  for (int n = 2; n <= max_degree; ++n) {
    detail::QuotientSearch search(pres, u, v, n);
    if (auto w = search.run()) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace gtorsion
