#pragma once

// JSON form of TorsionCertificate. Keys are emitted in sorted order and words
// in canonical text form, so write(read(write(c))) == write(c) byte for byte.
//
//   {
//     "alphabet": ["a", "b"],
//     "base": "b^-1 a^-1 b a",
//     "context": {"generators": ["a", "b"], "relators": ["..."]},
//     "derivation": ["duplicate 0", "..."],
//     "factors": ["b a^3 b a", "..."],
//     "target": "...",
//     "version": "gtorsion-certificate/1",
//     "witness": {"degree": 5, "images": [["a", [2, 3, 1, 4, 5]], ...],
//                 "u": "b", "v": "a"}
//   }

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtorsion/certificate.hpp"
#include "gtorsion/error.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/quotient.hpp"
#include "gtorsion/tietze.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

inline constexpr std::string_view kCertificateVersion = "gtorsion-certificate/1";

namespace detail {

using nlohmann::json;

inline json alphabet_json(Alphabet const& a) {
  json out = json::array();
  for (auto const& g : a) {
    out.push_back(g.name());
  }
  return out;
}

inline Alphabet alphabet_from(json const& j) {
  Alphabet a;
  for (auto const& g : j) {
    a.add(Generator(g.get<std::string>()));
  }
  return a;
}

inline json presentation_json(Presentation const& p) {
  json rels = json::array();
  for (auto const& r : p.relators()) {
    rels.push_back(format_word(r));
  }
  return {{"generators", alphabet_json(p.generators())}, {"relators", rels}};
}

inline Presentation presentation_from(json const& j) {
  Alphabet gens = alphabet_from(j.at("generators"));
  std::vector<Word> rels;
  for (auto const& r : j.at("relators")) {
    rels.push_back(parse_word(r.get<std::string>(), gens));
  }
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace detail

inline std::string write_certificate(TorsionCertificate const& cert) {
  using detail::json;
  json j;
  j["version"] = std::string(kCertificateVersion);
  j["alphabet"] = detail::alphabet_json(cert.alphabet);
  j["base"] = format_word(cert.base);
  j["target"] = format_word(cert.target);
  json factors = json::array();
  for (auto const& f : cert.factors) {
    factors.push_back(format_word(f.conjugator));
  }
  j["factors"] = factors;
  if (cert.context) {
    j["context"] = detail::presentation_json(*cert.context);
  }
  if (!cert.derivation.empty()) {
    json moves = json::array();
    for (auto const& m : cert.derivation) {
      moves.push_back(format_move(m));
    }
    j["derivation"] = moves;
  }
  if (cert.nontriviality) {
    auto const& w = *cert.nontriviality;
    json images = json::array();
    for (auto const& [g, p] : w.images) {
      images.push_back(json::array({g.name(), p.one_based()}));
    }
    j["witness"] = {{"degree", w.degree},
                    {"images", images},
                    {"u", format_word(w.u)},
                    {"v", format_word(w.v)}};
  }
  return j.dump(2) + "\n";
}

inline TorsionCertificate read_certificate(std::string_view text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    if (j.at("version").get<std::string>() != kCertificateVersion) {
      throw ParseError("unsupported certificate version '"
                           + j.at("version").get<std::string>() + "'",
                       0);
    }
    TorsionCertificate cert;
    cert.alphabet = detail::alphabet_from(j.at("alphabet"));
    cert.base = parse_word(j.at("base").get<std::string>(), cert.alphabet);
    cert.target = parse_word(j.at("target").get<std::string>(), cert.alphabet);
    for (auto const& f : j.at("factors")) {
      cert.factors.push_back({parse_word(f.get<std::string>(), cert.alphabet)});
    }
    if (j.contains("context")) {
      cert.context = detail::presentation_from(j.at("context"));
    }
    if (j.contains("derivation")) {
      for (auto const& m : j.at("derivation")) {
        cert.derivation.push_back(parse_move(m.get<std::string>()));
      }
    }
    if (j.contains("witness")) {
      auto const& jw = j.at("witness");
      HomWitness w;
      w.degree = jw.at("degree").get<std::size_t>();
      for (auto const& img : jw.at("images")) {
        w.images.emplace_back(
            Generator(img.at(0).get<std::string>()),
            Permutation::from_one_based(img.at(1).get<std::vector<int>>()));
      }
      w.u = parse_word(jw.at("u").get<std::string>(), cert.alphabet);
      w.v = parse_word(jw.at("v").get<std::string>(), cert.alphabet);
      cert.nontriviality = std::move(w);
    }
    return cert;
  } catch (json::exception const& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  } catch (DomainError const& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

}  // namespace gtorsion
