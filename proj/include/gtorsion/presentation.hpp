#pragma once

// Finite group presentations <generators | relators>. A relator r stands for
// the relation r = 1; an equation L = R is stored as L R^-1.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/smith.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

class Presentation {
 public:
  Presentation() = default;

  Presentation(Alphabet generators, std::vector<Word> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    for (auto const& r : relators_) {
      check_relator(r);
    }
  }

  Alphabet const& generators() const noexcept { return generators_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  void add_relator(Word r) {
    check_relator(r);
    relators_.push_back(std::move(r));
  }

  bool operator==(Presentation const&) const = default;

 private:
  void check_relator(Word const& r) const {
    for (auto const& l : r) {
      if (!generators_.contains(l.gen())) {
        throw DomainError("relator uses undeclared generator '"
                          + l.gen().name() + "'");
      }
    }
  }

  Alphabet generators_;
  std::vector<Word> relators_;
};

// "L = R" becomes L R^-1; a plain word is taken as a relator.
inline Word parse_relation(std::string_view text, Alphabet const& alphabet) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    return parse_word(text, alphabet);
  }
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("more than one '=' in relation", text.find('=', eq + 1));
  }
  Word lhs = parse_word(text.substr(0, eq), alphabet);
  Word rhs;
  try {
    rhs = parse_word(text.substr(eq + 1), alphabet);
  } catch (ParseError const& e) {
    throw ParseError(e.message(), eq + 1 + e.position());
  }
  return lhs * rhs.inverse();
}

// ---------------------------------------------------------------------------
// Abelianization

struct AbelianInvariants {
  std::vector<long> torsion;  // each > 1, successive divisibility
  std::size_t free_rank = 0;

  bool is_infinite_cyclic() const { return torsion.empty() && free_rank == 1; }
  bool operator==(AbelianInvariants const&) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < free_rank; ++i) {
      out += out.empty() ? "Z" : " + Z";
    }
    for (long d : torsion) {
      out += (out.empty() ? "Z/" : " + Z/") + std::to_string(d);
    }
    return out.empty() ? "0" : out;
  }
};

// Rows: relators, columns: generators.
inline IntMatrix exponent_matrix(Presentation const& pres) {
  IntMatrix m;
  for (auto const& r : pres.relators()) {
    std::vector<BigInt> row;
    for (auto const& g : pres.generators()) {
      row.emplace_back(exponent_sum(r, g));
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline AbelianInvariants abelianization(Presentation const& pres) {
  auto const snf =
      smith_normal_form(exponent_matrix(pres), pres.generators().size());
  AbelianInvariants out;
  out.free_rank = pres.generators().size() - snf.rank;
  for (auto const& d : snf.invariants) {
    if (d > 1) {
      out.torsion.push_back(static_cast<long>(d));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   generators: a b
//   relator: [b, a b a^3 b a]
//   relator: a^2 = b^3
//
// write_presentation emits canonical "relator: <word>" lines.

inline std::string format_presentation(Presentation const& pres) {
  std::string out = "generators:";
  for (auto const& g : pres.generators()) {
    out += ' ' + g.name();
  }
  out += '\n';
  for (auto const& r : pres.relators()) {
    out += "relator: " + format_word(r) + '\n';
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline Alphabet parse_generator_list(std::string_view text) {
  Alphabet a;
  std::istringstream in{std::string(text)};
  std::string name;
  while (in >> name) {
    if (!Generator::valid_name(name)) {
      throw ParseError("invalid generator name '" + name + "'", 0);
    }
    a.add(Generator(name));
  }
  return a;
}

}  // namespace detail

// Parses lines of a presentation block; `line_offset` only affects messages.
inline Presentation parse_presentation_lines(
    std::vector<std::string> const& lines, std::size_t line_offset = 0) {
  Alphabet gens;
  bool have_gens = false;
  std::vector<Word> relators;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto where = "line " + std::to_string(line_offset + i + 1) + ": ";
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(where + "expected 'key: value'", 0);
    }
    auto key = detail::trim(line.substr(0, colon));
    auto value = detail::trim(line.substr(colon + 1));
    try {
      if (key == "generators") {
        if (have_gens) {
          throw ParseError("generators declared twice", 0);
        }
        gens = detail::parse_generator_list(value);
        have_gens = true;
      } else if (key == "relator") {
        if (!have_gens) {
          throw ParseError("relator before generators", 0);
        }
        relators.push_back(parse_relation(value, gens));
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", 0);
      }
    } catch (ParseError const& e) {
      throw ParseError(where + e.message(), e.position());
    } catch (DomainError const& e) {
      throw ParseError(where + e.what(), 0);
    }
  }
  if (!have_gens) {
    throw ParseError("missing 'generators:' line", 0);
  }
  return Presentation(std::move(gens), std::move(relators));
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) {
        lines.emplace_back(text.substr(start));
      }
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

inline Presentation parse_presentation(std::string_view text) {
  return parse_presentation_lines(split_lines(text));
}

inline std::ostream& operator<<(std::ostream& os, Presentation const& p) {
  return os << format_presentation(p);
}

}  // namespace gtorsion
