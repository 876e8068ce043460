#pragma once

// Presentations and words for the knot and link families:
//
//  * L(q, n): the two-generator link group <a, b | [b, (ab)^q a^(n+2) (ba)^q]>
//    of the (2, 2q+1) torus knot together with the braid axis c_n, and the
//    relator w_{q,n} read off the handlebody picture;
//  * the twisted torus knots K(p(m+1)+1, pm+1; 2, s) in the two-generator
//    form <a, c | ...>;
//  * the (-2, 3, 2s+5) pretzel knots K(5, 3; 2, s) in the form
//    <b, y | y^2 = w(b^-1, y)>, with the Tietze chain that produces it.

#include <string>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/tietze.hpp"
#include "gtorsion/word.hpp"

namespace gtorsion {

namespace detail {

inline Word gpow(char const* name, long k) { return Word::of(name).pow(k); }

inline void require(bool ok, std::string const& msg) {
  if (!ok) {
    throw DomainError(msg);
  }
}

}  // namespace detail

// (ab)^q a^(n+2) (ba)^q
inline Word link_inner_word(long q, long n) {
  detail::require(q >= 0 && n >= 1, "link family requires q >= 0 and n >= 1");
  using detail::gpow;
  Word ab = gpow("a", 1) * gpow("b", 1);
  Word ba = gpow("b", 1) * gpow("a", 1);
  return ab.pow(q) * gpow("a", n + 2) * ba.pow(q);
}

// q == 0 gives the (-2, 3, 2n+6) pretzel link.
inline Presentation preset_link_presentation(long q, long n) {
  Word w = link_inner_word(q, n);
  return Presentation(Alphabet{"a", "b"}, {commutator(Word::of("b"), w)});
}

// a (b^-1 a^-1)^q b^-1 (ab)^q a^(n+2) b (ab)^q (a^-1 b^-1)^q a^-1 a^-(n+2)
inline Word preset_w_qn(long q, long n) {
  detail::require(q >= 0 && n >= 1, "w_{q,n} requires q >= 0 and n >= 1");
  using detail::gpow;
  Word a = gpow("a", 1), b = gpow("b", 1);
  Word A = a.inverse(), B = b.inverse();
  return a * (B * A).pow(q) * B * (a * b).pow(q) * gpow("a", n + 2) * b
         * (a * b).pow(q) * (A * B).pow(q) * A * gpow("a", -(n + 2));
}

// w_{q,n} and [b, (ab)^q a^(n+2) (ba)^q] are conjugate up to inversion in the
// free group, so their normal closures coincide.
inline bool relators_equivalent(Word const& r1, Word const& r2) {
  return free_conjugate(r1, r2).has_value()
         || free_conjugate(r1, r2.inverse()).has_value();
}

inline bool check_relator_equivalence(long q, long n) {
  return relators_equivalent(preset_w_qn(q, n),
                             preset_link_presentation(q, n).relators().front());
}

namespace detail {

// LHS R^-1 of
//   a^((p-1)(m+1)+1) X^s a^(m+1) = c^((p-1)m+1) X^s c^m,
//   X = a^-((p-2)(m+1)+1) c^((p-2)m+1).
inline Word twisted_torus_relator(long p, long m, long s) {
  long const alpha = (p - 2) * (m + 1) + 1;
  long const gamma = (p - 2) * m + 1;
  Word x = gpow("a", -alpha) * gpow("c", gamma);
  Word lhs = gpow("a", (p - 1) * (m + 1) + 1) * x.pow(s) * gpow("a", m + 1);
  Word rhs = gpow("c", (p - 1) * m + 1) * x.pow(s) * gpow("c", m);
  return lhs * rhs.inverse();
}

}  // namespace detail

// Knot group of K(p(m+1)+1, pm+1; 2, s), p >= 2, m, s >= 1.
inline Presentation preset_twisted_torus_presentation(long p, long m, long s) {
  detail::require(p >= 2 && m >= 1 && s >= 1,
                  "twisted torus family requires p >= 2 and m, s >= 1");
  return Presentation(Alphabet{"a", "c"},
                      {detail::twisted_torus_relator(p, m, s)});
}

// w(b^-1, y) = b^-1 y b^-(s+1) y b^-1 y b^-(s+1) y b^-1
inline Word pretzel_w(long s) {
  detail::require(s >= 0, "pretzel family requires s >= 0");
  using detail::gpow;
  Word y = gpow("y", 1);
  Word B = gpow("b", -1);
  Word Bs = gpow("b", -(s + 1));
  return B * y * Bs * y * B * y * Bs * y * B;
}

// <b, y | y^2 = w(b^-1, y)>, the knot group of K(5, 3; 2, s).
inline Presentation preset_pretzel_presentation(long s) {
  return Presentation(Alphabet{"b", "y"},
                      {detail::gpow("y", 2) * pretzel_w(s).inverse()});
}

// For s = 1 the relator of preset_twisted_torus_presentation(p, m, 1) reads
// c^((p-2)m+1) = w(a^-1, c) with
//   w = a^-(m+1) c^((p-1)m+1) a^-((p-2)(m+1)+1) c^((p-1)m+1) a^-(m+1).
inline Word twisted_torus_s1_w(long p, long m) {
  detail::require(p >= 2 && m >= 1, "requires p >= 2 and m >= 1");
  using detail::gpow;
  long const alpha = (p - 2) * (m + 1) + 1;
  Word cp = gpow("c", (p - 1) * m + 1);
  return gpow("a", -(m + 1)) * cp * gpow("a", -alpha) * cp
         * gpow("a", -(m + 1));
}

// Tietze chain from the (p, m) = (2, 1) case of the twisted torus
// presentation to <b, y | y^2 = w(b^-1, y)>:
//   b = a^-1 c, eliminate c = ab; x = a b^(s-1), eliminate a;
//   y = b x b, rewrite b x b^2 x b as y^2, eliminate x = b^-1 y b^-1.
inline TietzeScript pretzel_chain_script(long s) {
  detail::require(s >= 0, "pretzel family requires s >= 0");
  using namespace tietze;
  using detail::gpow;
  TietzeScript script;
  script.initial = Presentation(Alphabet{"a", "c"},
                                {detail::twisted_torus_relator(2, 1, s)});
  Word bxb_inv = gpow("b", -1) * gpow("x", -1) * gpow("b", -1);
  script.moves = {
      AddGenerator{Generator("b"), gpow("a", -1) * gpow("c", 1)},
      RemoveGenerator{Generator("c"), 1},
      Conjugate{0, gpow("a", 1)},
      AddGenerator{Generator("x"), gpow("a", 1) * gpow("b", s - 1)},
      RemoveGenerator{Generator("a"), 1},
      AddGenerator{Generator("y"), gpow("b", 1) * gpow("x", 1) * gpow("b", 1)},
      Substitute{0, 1, 0, bxb_inv, gpow("y", -1)},
      Substitute{0, 1, 0, bxb_inv, gpow("y", -1)},
      RemoveGenerator{Generator("x"), 1},
      Invert{0},
  };
  script.expected = preset_pretzel_presentation(s);
  return script;
}

}  // namespace gtorsion
