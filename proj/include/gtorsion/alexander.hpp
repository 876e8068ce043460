#pragma once

// Fox calculus and the Alexander polynomial of a two-generator one-relator
// knot group, plus the closed form for the (-2, 3, 2n+5) pretzel knots.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "gtorsion/error.hpp"
#include "gtorsion/laurent.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/smith.hpp"
#include "gtorsion/word.hpp"

namespace gtorsion {

// Finite integer combination of reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement of(Word const& w, long c = 1) {
    GroupRingElement x;
    x.add(w, c);
    return x;
  }

  std::map<Word, long> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Word const& w, long c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  GroupRingElement& operator+=(GroupRingElement const& o) {
    for (auto const& [w, c] : o.terms_) {
      add(w, c);
    }
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) {
    return a += b;
  }

  // u * x, u acting on the left
  friend GroupRingElement operator*(Word const& u, GroupRingElement const& x) {
    GroupRingElement out;
    for (auto const& [w, c] : x.terms_) {
      out.add(u * w, c);
    }
    return out;
  }

  bool operator==(GroupRingElement const&) const = default;

 private:
  std::map<Word, long> terms_;
};

// d(uv)/dg = du/dg + u dv/dg, dg/dg = 1, d(g^-1)/dg = -g^-1.
inline GroupRingElement fox_derivative(Word const& u, Generator const& g) {
  GroupRingElement out;
  Word prefix;
  for (auto const& l : u) {
    Word const next = prefix * Word::of(l.gen(), l.sign());
    if (l.gen() == g) {
      if (l.sign() > 0) {
        out.add(prefix, 1);
      } else {
        out.add(next, -1);
      }
    }
    prefix = next;
  }
  return out;
}

using WeightMap = std::map<Generator, long>;

// Generator weights of the abelianization G -> Z = <t>, primitive and with
// the first non-zero weight positive.
inline WeightMap abelianize_weights(Presentation const& pres) {
  auto const ab = abelianization(pres);
  if (!ab.is_infinite_cyclic()) {
    throw DomainError("abelianization is " + ab.to_string() + ", not Z");
  }
  auto const& gens = pres.generators();
  auto const snf = smith_normal_form(exponent_matrix(pres), gens.size());
  std::vector<BigInt> v;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    v.push_back(snf.column_transform[i][snf.rank]);
  }
  BigInt g = 0;
  for (auto const& c : v) {
    g = gcd(g, c);
  }
  if (g == 0) {
    throw DomainError("degenerate weight vector");
  }
  int sign = 0;
  for (auto const& c : v) {
    if (c != 0) {
      sign = c < 0 ? -1 : 1;
      break;
    }
  }
  WeightMap out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out[gens[i]] = static_cast<long>(v[i] / g) * sign;
  }
  for (auto const& r : pres.relators()) {
    long total = 0;
    for (auto const& [gen, w] : out) {
      total += w * exponent_sum(r, gen);
    }
    if (total != 0) {
      throw DomainError("weight map does not kill relator");
    }
  }
  return out;
}

// Image of a group ring element under g -> t^weight(g).
inline LaurentPoly abelianize(GroupRingElement const& x, WeightMap const& weights) {
  LaurentPoly out;
  for (auto const& [w, c] : x.terms()) {
    long e = 0;
    for (auto const& l : w) {
      e += weights.at(l.gen()) * l.sign();
    }
    out.add_term(e, c);
  }
  return out;
}

// sum_i phi(dr/dg_i) (t^w_i - 1); zero for every word r.
inline LaurentPoly fundamental_identity_residual(Word const& r,
                                                 Alphabet const& gens,
                                                 WeightMap const& weights) {
  LaurentPoly sum;
  for (auto const& g : gens) {
    sum += abelianize(fox_derivative(r, g), weights)
           * LaurentPoly::t_pow_minus_one(weights.at(g));
  }
  return sum;
}

inline LaurentPoly alexander_poly(Presentation const& pres) {
  if (pres.generators().size() != 2 || pres.relators().size() != 1) {
    throw DomainError("need exactly two generators and one relator");
  }
  auto const weights = abelianize_weights(pres);
  auto const& r = pres.relators().front();
  Generator const& g1 = pres.generators()[0];
  Generator const& g2 = pres.generators()[1];
  LaurentPoly const a1 = abelianize(fox_derivative(r, g1), weights);
  LaurentPoly const a2 = abelianize(fox_derivative(r, g2), weights);
  if (!fundamental_identity_residual(r, pres.generators(), weights).is_zero()) {
    throw DomainError("fundamental identity fails");
  }
  // A_i (t^w_j - 1) = -A_j (t^w_i - 1), so Delta = A_i (t - 1) / (t^w_j - 1)
  // for any j with w_j != 0.
  bool const use_first = weights.at(g2) != 0;
  LaurentPoly const& num = use_first ? a1 : a2;
  long const wj = use_first ? weights.at(g2) : weights.at(g1);
  LaurentPoly const delta =
      exact_divide(num * LaurentPoly::t_pow_minus_one(1),
                   LaurentPoly::t_pow_minus_one(wj));
  if (delta.is_zero()) {
    throw DomainError("Alexander polynomial vanishes");
  }
  return delta.normalized();
}

// t^(2n+8) - t^(2n+7) + (t^(2n+5) - t^(2n+4) + ... - t^4 + t^3) - t + 1
inline LaurentPoly pretzel_delta(long n) {
  if (n < 0) {
    throw DomainError("pretzel polynomial requires n >= 0");
  }
  LaurentPoly p;
  p.add_term(2 * n + 8, 1);
  p.add_term(2 * n + 7, -1);
  for (long e = 3; e <= 2 * n + 5; ++e) {
    p.add_term(e, e % 2 != 0 ? 1 : -1);
  }
  p.add_term(1, -1);
  p.add_term(0, 1);
  return p;
}

}  // namespace gtorsion
