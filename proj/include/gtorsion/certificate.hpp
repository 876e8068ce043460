#pragma once

// Generalized torsion certificates.
//
// With [x, y] = x^-1 y^-1 x y and x^g = g^-1 x g, the identity
//
//     [x, yz] = [x, z] [x, y]^z
//
// peels the first letter off the second argument. Iterating it on
// w = l_1 l_2 ... l_k gives, in the free group,
//
//     [x, w] = prod_{i = k .. 1} [x, l_i]^(l_{i+1} ... l_k).
//
// If every l_i is either a fixed a^e or x^(+-1) (whose commutator with x is
// trivial), [x, w] is a product of conjugates of [x, a^e]. So whenever
// [x, w] = 1 holds in a group G, [x, a^e] is a generalized torsion element
// of G as soon as it is non-trivial there.
//
// A certificate records base = [x, a^e], the conjugators and target = [x, w];
// verify_certificate recomputes everything from scratch.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/quotient.hpp"
#include "gtorsion/tietze.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

class CertificateError : public Error {
 public:
  using Error::Error;
};

struct ConjugateFactor {
  Word conjugator;
  bool operator==(ConjugateFactor const&) const = default;
};

struct TorsionCertificate {
  Alphabet alphabet;
  Word base;
  std::vector<ConjugateFactor> factors;
  Word target;
  // Presentation in which target = 1 is claimed.
  std::optional<Presentation> context;
  // Tietze moves turning `context` into a presentation with target (or its
  // inverse) among the relators, up to cyclic conjugacy. Empty when the
  // context contains such a relator already.
  std::vector<TietzeMove> derivation;
  // Homomorphism showing the base is non-trivial in the context group.
  std::optional<HomWitness> nontriviality;

  bool operator==(TorsionCertificate const&) const = default;
};

// [x, yz] = [x, z] [x, y]^z; returns ([x, z], [x, y]^z).
inline std::pair<Word, Word> split_commutator(Word const& x, Word const& y,
                                              Word const& z) {
  return {commutator(x, z), conjugate(commutator(x, y), z)};
}

// w is taken letter by letter (powers expanded); each letter equal to the
// base letter a^e contributes one factor, letters x^(+-1) contribute none.
inline TorsionCertificate decompose(Word const& x, std::span<Letter const> w) {
  if (x.size() != 1) {
    throw CertificateError("x must be a single generator or its inverse, got "
                           + format_word(x));
  }
  if (w.empty()) {
    throw CertificateError("w must be non-empty");
  }
  Generator const& xg = x[0].gen();
  std::optional<Letter> base_letter;
  for (auto const& l : w) {
    if (l.gen() == xg) {
      continue;
    }
    if (!base_letter) {
      base_letter = l;
    } else if (l.gen() != base_letter->gen()) {
      throw CertificateError("w involves a third generator '" + l.gen().name()
                             + "' besides " + xg.name() + " and "
                             + base_letter->gen().name());
    } else if (l.sign() != base_letter->sign()) {
      throw CertificateError("w contains both " + base_letter->gen().name()
                             + " and its inverse");
    }
  }
  if (!base_letter) {
    throw CertificateError("w contains only the letter " + xg.name()
                           + "^(+-1); no base element");
  }

  TorsionCertificate cert;
  cert.alphabet.insert(xg);
  cert.alphabet.insert(base_letter->gen());
  Word a = Word(std::span<Letter const>(&*base_letter, 1));
  cert.base = commutator(x, a);
  cert.target = commutator(x, Word(w));
  // Suffix conjugators, i = k down to 1.
  Word suffix;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == *base_letter) {
      cert.factors.push_back({suffix});
    }
    suffix = Word::of(w[i].gen(), w[i].sign()) * suffix;
  }
  return cert;
}

inline TorsionCertificate decompose(Word const& x, Word const& w) {
  return decompose(x, std::span<Letter const>(w.letters()));
}

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;
};

// Product of the conjugates of the base, folded left to right.
inline Word certificate_product(TorsionCertificate const& cert) {
  Word acc;
  for (auto const& f : cert.factors) {
    acc *= conjugate(cert.base, f.conjugator);
  }
  return acc;
}

// The presentation obtained by replaying the derivation on the context.
inline Presentation derived_context(TorsionCertificate const& cert) {
  if (!cert.context) {
    throw CertificateError("certificate has no context presentation");
  }
  if (cert.derivation.empty()) {
    return *cert.context;
  }
  auto r = replay(*cert.context, cert.derivation, std::nullopt);
  if (!r.ok) {
    throw CertificateError("derivation fails: " + r.reason);
  }
  return r.result;
}

inline CertificateCheck verify_certificate(TorsionCertificate const& cert) {
  if (cert.factors.empty()) {
    return {false, "no factors: the product must be non-empty"};
  }
  if (cert.base.is_identity()) {
    return {false, "base is the identity"};
  }
  auto uses_alphabet = [&](Word const& w) {
    for (auto const& l : w) {
      if (!cert.alphabet.contains(l.gen())) {
        return false;
      }
    }
    return true;
  };
  if (!uses_alphabet(cert.base) || !uses_alphabet(cert.target)) {
    return {false, "base or target uses a generator outside the alphabet"};
  }
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    if (!uses_alphabet(cert.factors[i].conjugator)) {
      return {false, "conjugator " + std::to_string(i)
                         + " uses a generator outside the alphabet"};
    }
  }
  Word const product = certificate_product(cert);
  if (product != cert.target) {
    return {false, "product of conjugates is " + format_word(product)
                       + ", expected " + format_word(cert.target)};
  }
  if (cert.context) {
    Presentation derived;
    try {
      derived = derived_context(cert);
    } catch (Error const& e) {
      return {false, e.what()};
    }
    bool found = false;
    for (auto const& r : derived.relators()) {
      found = found || free_conjugate(r, cert.target).has_value()
              || free_conjugate(r, cert.target.inverse()).has_value();
    }
    if (!found) {
      return {false, "target is not a relator of the context presentation"};
    }
  } else if (!cert.derivation.empty()) {
    return {false, "derivation given without a context presentation"};
  }
  if (cert.nontriviality) {
    if (!cert.context) {
      return {false, "non-triviality witness given without a context"};
    }
    auto const& wit = *cert.nontriviality;
    if (commutator(wit.u, wit.v) != cert.base) {
      return {false, "witness is about [" + format_word(wit.u) + ", "
                         + format_word(wit.v) + "], not the base"};
    }
    auto hc = check_hom(*cert.context, wit);
    if (!hc.ok) {
      return {false, "non-triviality witness: " + hc.diagnostic};
    }
  }
  return {true, {}};
}

// Builds the derivation of the relator [x, w] from a relator r ~ x^k w^-1
// (or its inverse), i.e. from w = x^k: duplicate r, bring the copy to the
// form x^-k w and substitute x^-k -> x^-1 w^-1 x, giving x^-1 w^-1 x w.
inline std::optional<std::vector<TietzeMove>> commutator_derivation(
    Presentation const& pres, Word const& x, Word const& w) {
  using namespace tietze;
  Generator const& xg = x[0].gen();
  long const ex = exponent_sum(x, xg);
  long const ew = exponent_sum(w, xg);
  std::size_t const copy = pres.relators().size();
  for (std::size_t j = 0; j < pres.relators().size(); ++j) {
    auto const& r = pres.relators()[j];
    long const er = exponent_sum(r, xg);
    for (int inv = 0; inv < 2; ++inv) {
      // r^(+-1) ~ x^-k w  with  er * (+-1) = ew - k*ex.
      long const k = (ew - (inv ? -er : er)) * ex;
      if (k == 0) {
        continue;
      }
      Word xk = x.pow(k);
      Word q = xk.inverse() * w;
      if (q.size() < static_cast<std::size_t>(k < 0 ? -k : k)
          || q.slice(0, static_cast<std::size_t>(k < 0 ? -k : k)) != xk.inverse()) {
        continue;
      }
      auto g = free_conjugate(inv ? r.inverse() : r, q);
      if (!g) {
        continue;
      }
      std::vector<TietzeMove> moves{Duplicate{j}};
      if (inv) {
        moves.push_back(Invert{copy});
      }
      moves.push_back(Conjugate{copy, *g});
      moves.push_back(
          Substitute{copy, j, 0, xk.inverse(), x.inverse() * w.inverse() * x});
      return moves;
    }
  }
  return std::nullopt;
}

// Certificate for [x, a^e] in the group presented by `pres`, where the group
// satisfies [x, w] = 1 either as a relator (up to cyclic conjugacy and
// inversion) or through a relator expressing w as a power of x.
inline TorsionCertificate certify_for_presentation(Presentation const& pres,
                                                   Generator const& x,
                                                   Word const& w) {
  if (!pres.generators().contains(x)) {
    throw CertificateError("generator '" + x.name() + "' not in presentation");
  }
  for (auto const& l : w) {
    if (!pres.generators().contains(l.gen())) {
      throw CertificateError("w uses undeclared generator '" + l.gen().name()
                             + "'");
    }
  }
  Word const xw = Word::of(x);
  TorsionCertificate cert = decompose(xw, w);
  cert.alphabet = pres.generators();
  cert.context = pres;

  for (auto const& r : pres.relators()) {
    if (free_conjugate(r, cert.target) || free_conjugate(r, cert.target.inverse())) {
      return cert;
    }
  }
  auto moves = commutator_derivation(pres, xw, w);
  if (!moves) {
    throw CertificateError("no relator of the form [" + x.name() + ", w] or "
                           + x.name() + "^k = w in the presentation");
  }
  cert.derivation = std::move(*moves);
  return cert;
}

// Searches for the non-triviality witness of cert.base in its context and
// attaches it. Returns false when none exists up to max_degree.
inline bool attach_nontriviality(TorsionCertificate& cert,
                                 int max_degree = kDefaultMaxDegree) {
  if (!cert.context) {
    throw CertificateError("certificate has no context presentation");
  }
  // base = [x, a^e] = x^-1 a^-e x a^e
  Word const& b = cert.base;
  if (b.size() != 4) {
    throw CertificateError("base is not a commutator of two letters");
  }
  Word x = b.slice(2, 1);
  Word a = b.slice(3, 1);
  if (commutator(x, a) != b) {
    throw CertificateError("base is not a commutator of two letters");
  }
  auto wit = find_nonabelian_quotient(*cert.context, x, a, max_degree);
  if (!wit) {
    return false;
  }
  cert.nontriviality = std::move(*wit);
  return true;
}

}  // namespace gtorsion
