#pragma once

// Claim runner behind `gtorsion reproduce`. Every claim recomputes its values
// from the library and compares them with independently stated closed forms
// (parsed from text where the claim is about a displayed formula).
//
// Report format, one tab-separated record per line:
//
//   claim <TAB> params <TAB> expected <TAB> computed <TAB> PASS|FAIL
//
// preceded by a header carrying the tool version and seed, and followed by a
// summary footer. Identical version and seed give identical bytes.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gtorsion/alexander.hpp"
#include "gtorsion/braid.hpp"
#include "gtorsion/certificate.hpp"
#include "gtorsion/dehn_twist.hpp"
#include "gtorsion/laurent.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/presets.hpp"
#include "gtorsion/quotient.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct ClaimRecord {
  std::string claim;
  std::string params;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ReproduceConfig {
  std::uint64_t seed = 0;
  int max_degree = kDefaultMaxDegree;
};

namespace detail {

inline std::string num(long v) { return std::to_string(v); }

inline ClaimRecord record(std::string claim, std::string params,
                          std::string expected, std::string computed) {
  bool const pass = expected == computed;
  return {std::move(claim), std::move(params), std::move(expected),
          std::move(computed), pass};
}

// Replaces each "{k}" in `text` by `values[k]`.
inline std::string fill(std::string text, std::vector<long> const& values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::string const key = "{" + std::to_string(k) + "}";
    for (auto at = text.find(key); at != std::string::npos; at = text.find(key)) {
      text.replace(at, key.size(), std::to_string(values[k]));
    }
  }
  return text;
}

inline Word random_word(std::mt19937_64& rng, Alphabet const& alpha,
                        std::size_t max_len) {
  std::vector<Letter> raw;
  std::size_t const len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    raw.emplace_back(alpha[rng() % alpha.size()], rng() % 2 == 0 ? 1 : -1);
  }
  return Word(raw);
}

}  // namespace detail

inline std::vector<ClaimRecord> claim_commutator_identity(ReproduceConfig const& cfg) {
  std::mt19937_64 rng(cfg.seed);
  Alphabet const alpha{"a", "b", "c"};
  int const trials = 1000;
  int held = 0;
  for (int i = 0; i < trials; ++i) {
    Word x = detail::random_word(rng, alpha, 20);
    Word y = detail::random_word(rng, alpha, 20);
    Word z = detail::random_word(rng, alpha, 20);
    auto [fz, fy] = split_commutator(x, y, z);
    if (commutator(x, y * z) == fz * fy
        && fz * fy == commutator(x, z) * conjugate(commutator(x, y), z)) {
      ++held;
    }
  }
  return {detail::record("commutator-identity", "triples=1000 rank=3 len<=20",
                         "1000/1000", detail::num(held) + "/1000")};
}

inline std::vector<ClaimRecord> claim_decomposition(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      auto const cert = certify_for_presentation(
          preset_link_presentation(q, n), Generator("b"), link_inner_word(q, n));
      auto const check = verify_certificate(cert);
      out.push_back(detail::record(
          "decomposition", "q=" + detail::num(q) + " n=" + detail::num(n),
          "factors=" + detail::num(2 * q + n + 2) + " verified",
          "factors=" + detail::num(static_cast<long>(cert.factors.size()))
              + (check.ok ? " verified" : " rejected: " + check.diagnostic)));
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_relator_equivalence(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      out.push_back(detail::record(
          "relator-equivalence", "q=" + detail::num(q) + " n=" + detail::num(n),
          "conjugate",
          check_relator_equivalence(q, n) ? "conjugate" : "not conjugate"));
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_nontriviality(ReproduceConfig const& cfg) {
  std::vector<ClaimRecord> out;
  for (long q = 1; q <= 3; ++q) {
    for (long n = 1; n <= 3; ++n) {
      auto const pres = preset_link_presentation(q, n);
      auto const wit = find_nonabelian_quotient(pres, Word::of("b"), Word::of("a"),
                                                cfg.max_degree);
      std::string computed = "none up to degree " + detail::num(cfg.max_degree);
      if (wit) {
        computed = verify_hom(pres, *wit) ? "witness verified" : "witness rejected";
        computed += " degree=" + detail::num(static_cast<long>(wit->degree));
      }
      bool const pass = wit && wit->degree <= 7 && verify_hom(pres, *wit);
      out.push_back({"nontriviality", "q=" + detail::num(q) + " n=" + detail::num(n),
                     "witness verified degree<=7", computed, pass});
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_dehn_twist(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  Alphabet const abcd = surface_alphabet();
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 1; s <= 2; ++s) {
        std::vector<long> const v{p - 2, m, s, (p - 1) * (m + 1) + 1, m + 1,
                                  (p - 1) * m + 1};
        std::string const params =
            "p=" + detail::num(p) + " m=" + detail::num(m) + " s=" + detail::num(s);
        auto const im = image_GRP(p, m, s);
        auto parse = [&](char const* text) {
          return parse_word(detail::fill(text, v), abcd);
        };
        struct Row {
          char const* what;
          Word computed;
          char const* expected;
        };
        Row const rows[] = {
            {"[G]", im.g, "d^{2} b"},
            {"[R]", im.r, "d (a (a c)^{1} d^{2} b)^2"},
            {"[P]", im.p, "(a (a c)^{1})^{0} a c (a (a c)^{1} d^{2} b)^2"},
        };
        for (auto const& row : rows) {
          out.push_back(detail::record("dehn-twist", params + " " + row.what,
                                       format_word(parse(row.expected)),
                                       format_word(row.computed)));
        }
        Row const proj[] = {
            {"U[G]", project_U(im.g), "b"},
            {"V[G]", project_V(im.g), "d^{2}"},
            {"U[R]", project_U(im.r), "a^{4} b a^{4} b"},
            {"V[R]", project_V(im.r), "d c^{1} d^{2} c^{1} d^{2}"},
            {"U[P]", project_U(im.p), "a^{3} b a^{4} b"},
            {"V[P]", project_V(im.p), "c^{5} d^{2} c^{1} d^{2}"},
        };
        for (auto const& row : proj) {
          out.push_back(detail::record("dehn-twist", params + " " + row.what,
                                       format_word(parse(row.expected)),
                                       format_word(row.computed)));
        }
      }
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_derive_eq1(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 1; s <= 2; ++s) {
        auto const r = derive_eq1(p, m, s);
        std::string computed = r.ok ? (r.literal_match ? "identical" : "equivalent")
                                    : "failed: " + r.replay.reason;
        out.push_back(detail::record(
            "derive-eq1",
            "p=" + detail::num(p) + " m=" + detail::num(m) + " s=" + detail::num(s),
            "identical", computed));
      }
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_genus_kq(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      auto const b = preset_kq_braid(static_cast<int>(q), static_cast<int>(n));
      int const comps = closure_components(b);
      std::string computed = "components=" + detail::num(comps);
      if (comps == 1) {
        computed += " genus=" + detail::num(positive_braid_genus(b));
      }
      out.push_back(detail::record(
          "genus-kq", "q=" + detail::num(q) + " n=" + detail::num(n),
          "components=1 genus=" + detail::num(q), computed));
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_linking_kq(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      auto const b = preset_kq_braid(static_cast<int>(q), static_cast<int>(n));
      out.push_back(detail::record("linking-kq",
                                   "q=" + detail::num(q) + " n=" + detail::num(n),
                                   detail::num(2 * q + n + 2),
                                   detail::num(axis_linking_number(b))));
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_genus_twisted_torus(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 0; s <= 2; ++s) {
        auto const b = preset_twisted_torus_braid(static_cast<int>(p),
                                                  static_cast<int>(m),
                                                  static_cast<int>(s));
        std::string computed = "strands=" + detail::num(b.strands())
                               + " length=" + detail::num(static_cast<long>(b.length()));
        int const comps = closure_components(b);
        computed += comps == 1 ? " genus=" + detail::num(positive_braid_genus(b))
                               : " components=" + detail::num(comps);
        out.push_back(detail::record(
            "genus-twisted-torus",
            "p=" + detail::num(p) + " m=" + detail::num(m) + " s=" + detail::num(s),
            "strands=" + detail::num(p * (m + 1) + 1)
                + " length=" + detail::num(p * (m + 1) * (p * m + 1) + 2 * s)
                + " genus=" + detail::num(p * p * m * (m + 1) / 2 + s),
            computed));
      }
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_genus_pretzel(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long s = 0; s <= 5; ++s) {
    auto const b = preset_twisted_torus_braid(2, 1, static_cast<int>(s));
    std::string computed = closure_components(b) == 1
                               ? "genus=" + detail::num(positive_braid_genus(b))
                               : "not a knot";
    out.push_back(detail::record("genus-pretzel", "s=" + detail::num(s),
                                 "genus=" + detail::num(s + 4), computed));
  }
  return out;
}

inline std::vector<ClaimRecord> claim_alexander_pretzel(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long s = 0; s <= 4; ++s) {
    auto const pres = preset_pretzel_presentation(s);
    LaurentPoly const delta = alexander_poly(pres);
    LaurentPoly const closed = pretzel_delta(s).normalized();
    std::string const params = "s=" + detail::num(s);
    out.push_back(detail::record("alexander-pretzel", params + " delta",
                                 format_laurent(closed), format_laurent(delta)));
    out.push_back(detail::record("alexander-pretzel", params + " delta(1)", "1",
                                 delta.eval_at_one().str()));
    out.push_back(detail::record(
        "alexander-pretzel", params + " symmetric", "yes",
        equal_up_to_units(delta, delta.reverse()) ? "yes" : "no"));
  }
  // The torus knot case stated explicitly.
  out.push_back(detail::record(
      "alexander-pretzel", "s=0 explicit",
      format_laurent(parse_laurent("t^8 - t^7 + t^5 - t^4 + t^3 - t + 1")),
      format_laurent(alexander_poly(preset_pretzel_presentation(0)))));
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 1; s <= 2; ++s) {
        LaurentPoly const delta =
            alexander_poly(preset_twisted_torus_presentation(p, m, s));
        std::string const params = "twisted p=" + detail::num(p)
                                   + " m=" + detail::num(m) + " s=" + detail::num(s);
        BigInt const at_one = delta.eval_at_one();
        out.push_back(detail::record("alexander-pretzel", params + " |delta(1)|",
                                     "1", (at_one < 0 ? BigInt(-at_one) : at_one).str()));
        out.push_back(detail::record(
            "alexander-pretzel", params + " symmetric", "yes",
            equal_up_to_units(delta, delta.reverse()) ? "yes" : "no"));
      }
    }
  }
  return out;
}

inline std::vector<ClaimRecord> claim_delta_no_positive_root(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  for (long n = 0; n <= 10; ++n) {
    out.push_back(detail::record(
        "delta-no-positive-root", "n=" + detail::num(n), "positive roots=0",
        "positive roots=" + detail::num(count_positive_real_roots(pretzel_delta(n)))));
  }
  return out;
}

inline std::vector<ClaimRecord> claim_abelianization(ReproduceConfig const&) {
  std::vector<ClaimRecord> out;
  auto add = [&](std::string params, Presentation const& pres, std::string expected) {
    out.push_back(detail::record("abelianization", std::move(params),
                                 std::move(expected), abelianization(pres).to_string()));
  };
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      add("link q=" + detail::num(q) + " n=" + detail::num(n),
          preset_link_presentation(q, n), "Z + Z");
    }
  }
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 1; s <= 2; ++s) {
        std::string const params =
            "p=" + detail::num(p) + " m=" + detail::num(m) + " s=" + detail::num(s);
        add("twisted " + params, preset_twisted_torus_presentation(p, m, s), "Z");
        add("svk " + params, svk_presentation(p, m, s), "Z");
      }
    }
  }
  for (long s = 0; s <= 4; ++s) {
    add("pretzel s=" + detail::num(s), preset_pretzel_presentation(s), "Z");
  }
  return out;
}

struct ClaimEntry {
  std::string_view id;
  std::function<std::vector<ClaimRecord>(ReproduceConfig const&)> run;
};

inline std::vector<ClaimEntry> const& claim_registry() {
  static std::vector<ClaimEntry> const registry{
      {"commutator-identity", claim_commutator_identity},
      {"decomposition", claim_decomposition},
      {"relator-equivalence", claim_relator_equivalence},
      {"nontriviality", claim_nontriviality},
      {"dehn-twist", claim_dehn_twist},
      {"derive-eq1", claim_derive_eq1},
      {"genus-kq", claim_genus_kq},
      {"linking-kq", claim_linking_kq},
      {"genus-twisted-torus", claim_genus_twisted_torus},
      {"genus-pretzel", claim_genus_pretzel},
      {"alexander-pretzel", claim_alexander_pretzel},
      {"delta-no-positive-root", claim_delta_no_positive_root},
      {"abelianization", claim_abelianization},
  };
  return registry;
}

// Runs one claim by id, or all of them when `id` is empty.
inline std::vector<ClaimRecord> run_claims(std::string_view id,
                                           ReproduceConfig const& cfg) {
  std::vector<ClaimRecord> out;
  bool found = false;
  for (auto const& entry : claim_registry()) {
    if (!id.empty() && entry.id != id) {
      continue;
    }
    found = true;
    try {
      auto recs = entry.run(cfg);
      out.insert(out.end(), recs.begin(), recs.end());
    } catch (Error const& e) {
      out.push_back({std::string(entry.id), "-", "no error",
                     std::string("error: ") + e.what(), false});
    }
  }
  if (!found) {
    throw DomainError("unknown claim '" + std::string(id) + "'");
  }
  return out;
}

inline std::string format_report(std::vector<ClaimRecord> const& records,
                                 ReproduceConfig const& cfg) {
  std::string out = "# gtorsion reproduce\tversion=" + std::string(kToolVersion)
                    + "\tseed=" + std::to_string(cfg.seed)
                    + "\tmax_degree=" + std::to_string(cfg.max_degree) + "\n";
  out += "claim\tparams\texpected\tcomputed\tstatus\n";
  std::size_t passed = 0;
  std::vector<std::string> failing;
  for (auto const& r : records) {
    out += r.claim + '\t' + r.params + '\t' + r.expected + '\t' + r.computed + '\t'
           + (r.pass ? "PASS" : "FAIL") + '\n';
    if (r.pass) {
      ++passed;
    } else if (failing.empty() || failing.back() != r.claim) {
      failing.push_back(r.claim);
    }
  }
  out += "# summary: " + std::to_string(passed) + "/" + std::to_string(records.size())
         + " records passed";
  if (failing.empty()) {
    out += ", all claims PASS\n";
  } else {
    out += ", failing claims:";
    for (auto const& f : failing) {
      out += " " + f;
    }
    out += '\n';
  }
  return out;
}

inline bool all_passed(std::vector<ClaimRecord> const& records) {
  for (auto const& r : records) {
    if (!r.pass) {
      return false;
    }
  }
  return !records.empty();
}

}  // namespace gtorsion
