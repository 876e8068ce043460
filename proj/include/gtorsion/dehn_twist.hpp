#pragma once

// Free-group endomorphisms induced by the Dehn twists (D1)-(D5) on the
// standard generators a, b, c, d of the genus two Heegaard surface, and the
// Seifert-van Kampen presentation of the twisted torus knot
// K(p(m+1)+1, pm+1; 2, s) assembled from the images of G = b, R = d, P = c.
//
// The twist table is taken as the definition:
//
//        a       b       c          d
//   D1   a       b       c(ab)^2    d(ab)^2
//   D2   a       b       a^(p-2)c   d
//   D3   ac^m    b       c          d
//   D4   a       b       ac         d
//   D5   a       d^s b   c          d
//
// and the steps are applied in the order D1, ..., D5.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/presets.hpp"
#include "gtorsion/tietze.hpp"
#include "gtorsion/word.hpp"

namespace gtorsion {

// Generators not listed in `images` are fixed.
class FreeEndo {
 public:
  FreeEndo() = default;

  FreeEndo(Alphabet alphabet, std::map<Generator, Word> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    for (auto const& [g, w] : images_) {
      if (!alphabet_.contains(g)) {
        throw DomainError("image given for unknown generator '" + g.name() + "'");
      }
      for (auto const& l : w) {
        if (!alphabet_.contains(l.gen())) {
          throw DomainError("image of " + g.name()
                            + " uses unknown generator '" + l.gen().name() + "'");
        }
      }
    }
  }

  Alphabet const& alphabet() const noexcept { return alphabet_; }

  Word image(Generator const& g) const {
    auto it = images_.find(g);
    return it == images_.end() ? Word::of(g) : it->second;
  }

  Word apply(Word const& u) const {
    Word out;
    for (auto const& l : u) {
      if (!alphabet_.contains(l.gen())) {
        throw DomainError("unknown generator '" + l.gen().name() + "'");
      }
      Word im = image(l.gen());
      out *= l.sign() > 0 ? im : im.inverse();
    }
    return out;
  }

 private:
  Alphabet alphabet_;
  std::map<Generator, Word> images_;
};

inline Word endo_apply(FreeEndo const& e, Word const& u) { return e.apply(u); }

inline Alphabet surface_alphabet() { return Alphabet{"a", "b", "c", "d"}; }

namespace detail {

inline void require_twist_params(long p, long m, long s) {
  if (p < 2 || m < 1 || s < 1) {
    throw DomainError("twist parameters require p >= 2 and m, s >= 1");
  }
}

inline Word sw(char const* name, long k = 1) { return Word::of(name).pow(k); }

}  // namespace detail

inline std::array<FreeEndo, 5> twist_table(long p, long m, long s) {
  detail::require_twist_params(p, m, s);
  using detail::sw;
  auto const ab2 = (sw("a") * sw("b")).pow(2);
  auto G = [](char const* n) { return Generator(n); };
  auto const alpha = surface_alphabet();
  return {
      FreeEndo(alpha, {{G("c"), sw("c") * ab2}, {G("d"), sw("d") * ab2}}),
      FreeEndo(alpha, {{G("c"), sw("a", p - 2) * sw("c")}}),
      FreeEndo(alpha, {{G("a"), sw("a") * sw("c", m)}}),
      FreeEndo(alpha, {{G("c"), sw("a") * sw("c")}}),
      FreeEndo(alpha, {{G("b"), sw("d", s) * sw("b")}}),
  };
}

// Image of u under D1 followed by D2, ..., D5.
inline Word twist_image(long p, long m, long s, Word const& u) {
  Word w = u;
  for (auto const& e : twist_table(p, m, s)) {
    w = e.apply(w);
  }
  return w;
}

struct GRPImages {
  Word g;  // image of [G] = b
  Word r;  // image of [R] = d
  Word p;  // image of [P] = c
};

inline GRPImages image_GRP(long p, long m, long s) {
  return {twist_image(p, m, s, detail::sw("b")),
          twist_image(p, m, s, detail::sw("d")),
          twist_image(p, m, s, detail::sw("c"))};
}

namespace detail {

inline Word delete_generators(Word const& u, char const* g1, char const* g2) {
  std::vector<Letter> kept;
  for (auto const& l : u) {
    if (l.gen().name() != g1 && l.gen().name() != g2) {
      kept.push_back(l);
    }
  }
  return Word(kept);
}

}  // namespace detail

// Push into the handlebody U: c = d = 1.
inline Word project_U(Word const& u) {
  return detail::delete_generators(u, "c", "d");
}

// Push into the handlebody V: a = b = 1.
inline Word project_V(Word const& u) {
  return detail::delete_generators(u, "a", "b");
}

// <a, b, c, d | project_U(X) = project_V(X), X = G, R, P>
inline Presentation svk_presentation(long p, long m, long s) {
  auto const im = image_GRP(p, m, s);
  std::vector<Word> rels;
  for (auto const* x : {&im.g, &im.r, &im.p}) {
    rels.push_back(project_U(*x) * project_V(*x).inverse());
  }
  return Presentation(surface_alphabet(), std::move(rels));
}

// Tietze chain from the Seifert-van Kampen presentation to the two-generator
// presentation <a, c | ...>:
//   eliminate b = d^s; in the second relator replace a^(m+1) d^s a^(m+1) by
//   d c^m d^s c^m using the first, leaving a^alpha d = c^gamma; eliminate
//   d = a^-alpha c^gamma; conjugate by a^-alpha.
inline TietzeScript eq1_derivation_script(long p, long m, long s) {
  detail::require_twist_params(p, m, s);
  using namespace tietze;
  using detail::sw;
  long const alpha = (p - 2) * (m + 1) + 1;
  TietzeScript script;
  script.initial = svk_presentation(p, m, s);
  script.moves = {
      RemoveGenerator{Generator("b"), 0},
      Substitute{1, 0, 0, sw("a", m + 1) * sw("d", s) * sw("a", m + 1),
                 sw("d") * sw("c", m) * sw("d", s) * sw("c", m)},
      RemoveGenerator{Generator("d"), 1},
      Conjugate{0, sw("a", -alpha)},
  };
  script.expected = preset_twisted_torus_presentation(p, m, s);
  return script;
}

struct DerivationResult {
  bool ok = false;
  ReplayResult replay;
  bool literal_match = false;  // final relator identical, not only equivalent
};

inline DerivationResult derive_eq1(long p, long m, long s) {
  auto const script = eq1_derivation_script(p, m, s);
  DerivationResult out;
  out.replay = replay(script);
  out.ok = out.replay.ok;
  out.literal_match = out.ok && out.replay.result == *script.expected;
  return out;
}

}  // namespace gtorsion
