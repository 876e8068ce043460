#pragma once

// Tietze transformations with per-move validity checks, and replay of
// scripted derivations.
//
// Every move is checked syntactically before it is applied; an invalid move
// raises TietzeError naming the violated condition. Moves never search: a
// script states exactly which relator, occurrence or conjugator is meant.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gtorsion/error.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/word.hpp"
#include "gtorsion/word_io.hpp"

namespace gtorsion {

class TietzeError : public Error {
 public:
  using Error::Error;
};

namespace tietze {

// Replace relator `relator` by a word that is freely equal to it.
struct FreeEqual {
  std::size_t relator;
  Word replacement;
  bool operator==(FreeEqual const&) const = default;
};

// Move the first `shift` letters of the relator to its end.
struct CyclicPermutation {
  std::size_t relator;
  std::size_t shift;
  bool operator==(CyclicPermutation const&) const = default;
};

struct Invert {
  std::size_t relator;
  bool operator==(Invert const&) const = default;
};

// r -> by^-1 r by
struct Conjugate {
  std::size_t relator;
  Word by;
  bool operator==(Conjugate const&) const = default;
};

// In relator `target`, replace the `occurrence`-th (0-based) literal
// occurrence of `old_part` by `new_part`. Valid when old_part new_part^-1 is
// a cyclic conjugate of relator `source` or of its inverse, so that
// old_part = new_part holds in the group.
struct Substitute {
  std::size_t target;
  std::size_t source;
  std::size_t occurrence;
  Word old_part;
  Word new_part;
  bool operator==(Substitute const&) const = default;
};

// New generator `gen` with relator gen definition^-1.
struct AddGenerator {
  Generator gen;
  Word definition;
  bool operator==(AddGenerator const&) const = default;
};

// Eliminate `gen` using a relator in which it occurs exactly once (the given
// one, or the first such relator).
struct RemoveGenerator {
  Generator gen;
  std::optional<std::size_t> relator;
  bool operator==(RemoveGenerator const&) const = default;
};

// Append a copy of a relator.
struct Duplicate {
  std::size_t relator;
  bool operator==(Duplicate const&) const = default;
};

// Drop a relator that is trivial or a cyclic conjugate of another relator or
// of its inverse.
struct RemoveRelator {
  std::size_t relator;
  bool operator==(RemoveRelator const&) const = default;
};

struct Rename {
  Generator from;
  Generator to;
  bool operator==(Rename const&) const = default;
};

}  // namespace tietze

using TietzeMove =
    std::variant<tietze::FreeEqual, tietze::CyclicPermutation, tietze::Invert,
                 tietze::Conjugate, tietze::Substitute, tietze::AddGenerator,
                 tietze::RemoveGenerator, tietze::Duplicate,
                 tietze::RemoveRelator, tietze::Rename>;

struct TietzeStep {
  Presentation result;
  std::string transcript;
};

namespace detail {

inline void check_index(Presentation const& p, std::size_t i,
                        std::string const& what) {
  if (i >= p.relators().size()) {
    throw TietzeError(what + " index " + std::to_string(i) + " out of range ("
                      + std::to_string(p.relators().size()) + " relators)");
  }
}

inline void check_declared(Presentation const& p, Word const& w,
                           std::string const& what) {
  for (auto const& l : w) {
    if (!p.generators().contains(l.gen())) {
      throw TietzeError(what + " uses undeclared generator '" + l.gen().name()
                        + "'");
    }
  }
}

inline bool conjugate_up_to_inverse(Word const& u, Word const& v) {
  return free_conjugate(u, v).has_value()
         || free_conjugate(u, v.inverse()).has_value();
}

inline Presentation with_relators(Presentation const& p,
                                  std::vector<Word> relators) {
  return Presentation(p.generators(), std::move(relators));
}

inline Word substitute_generator(Word const& w, Generator const& g,
                                 Word const& image) {
  Word out;
  for (auto const& l : w) {
    if (l.gen() == g) {
      out *= l.sign() > 0 ? image : image.inverse();
    } else {
      out *= Word::of(l.gen(), l.sign());
    }
  }
  return out;
}

inline std::string rel(std::size_t i) { return "relator " + std::to_string(i); }

}  // namespace detail

inline TietzeStep tietze_apply(Presentation const& pres, TietzeMove const& move) {
  using namespace tietze;
  auto rels = pres.relators();

  return std::visit(
      [&](auto const& m) -> TietzeStep {
        using M = std::decay_t<decltype(m)>;

        if constexpr (std::is_same_v<M, FreeEqual>) {
          detail::check_index(pres, m.relator, "relator");
          detail::check_declared(pres, m.replacement, "replacement");
          if (m.replacement != rels[m.relator]) {
            throw TietzeError("replacement is not freely equal to "
                              + detail::rel(m.relator));
          }
          return {pres, detail::rel(m.relator) + " rewritten freely"};

        } else if constexpr (std::is_same_v<M, CyclicPermutation>) {
          detail::check_index(pres, m.relator, "relator");
          auto const& r = rels[m.relator];
          if (!r.is_identity()) {
            auto s = m.shift % r.size();
            rels[m.relator] = r.slice(s, r.size() - s) * r.slice(0, s);
          }
          return {detail::with_relators(pres, std::move(rels)),
                  detail::rel(m.relator) + " cyclically permuted by "
                      + std::to_string(m.shift)};

        } else if constexpr (std::is_same_v<M, Invert>) {
          detail::check_index(pres, m.relator, "relator");
          rels[m.relator] = rels[m.relator].inverse();
          return {detail::with_relators(pres, std::move(rels)),
                  detail::rel(m.relator) + " inverted"};

        } else if constexpr (std::is_same_v<M, Conjugate>) {
          detail::check_index(pres, m.relator, "relator");
          detail::check_declared(pres, m.by, "conjugator");
          rels[m.relator] = conjugate(rels[m.relator], m.by);
          return {detail::with_relators(pres, std::move(rels)),
                  detail::rel(m.relator) + " conjugated by "
                      + format_word(m.by)};

        } else if constexpr (std::is_same_v<M, Substitute>) {
          detail::check_index(pres, m.target, "target");
          detail::check_index(pres, m.source, "source");
          if (m.target == m.source) {
            throw TietzeError("substitution source and target coincide");
          }
          if (m.old_part.is_identity()) {
            throw TietzeError("substituted subword is empty");
          }
          detail::check_declared(pres, m.old_part, "old subword");
          detail::check_declared(pres, m.new_part, "new subword");
          if (!detail::conjugate_up_to_inverse(m.old_part * m.new_part.inverse(),
                                               rels[m.source])) {
            throw TietzeError("old * new^-1 is not a cyclic conjugate of "
                              + detail::rel(m.source) + " or its inverse");
          }
          auto const& t = rels[m.target].letters();
          auto const& o = m.old_part.letters();
          std::size_t seen = 0;
          for (std::size_t i = 0; i + o.size() <= t.size(); ++i) {
            if (!std::equal(o.begin(), o.end(), t.begin() + static_cast<std::ptrdiff_t>(i))) {
              continue;
            }
            if (seen++ == m.occurrence) {
              auto const& r = rels[m.target];
              rels[m.target] = r.slice(0, i) * m.new_part
                               * r.slice(i + o.size(), t.size() - i - o.size());
              return {detail::with_relators(pres, std::move(rels)),
                      detail::rel(m.target) + ": " + format_word(m.old_part)
                          + " -> " + format_word(m.new_part) + " at letter "
                          + std::to_string(i) + " using "
                          + detail::rel(m.source)};
            }
          }
          throw TietzeError(detail::rel(m.target) + " has only "
                            + std::to_string(seen) + " occurrence(s) of "
                            + format_word(m.old_part));

        } else if constexpr (std::is_same_v<M, AddGenerator>) {
          if (pres.generators().contains(m.gen)) {
            throw TietzeError("generator '" + m.gen.name() + "' is not fresh");
          }
          detail::check_declared(pres, m.definition, "definition");
          Alphabet gens = pres.generators();
          gens.add(m.gen);
          rels.push_back(Word::of(m.gen) * m.definition.inverse());
          return {Presentation(std::move(gens), std::move(rels)),
                  "added generator " + m.gen.name() + " = "
                      + format_word(m.definition)};

        } else if constexpr (std::is_same_v<M, RemoveGenerator>) {
          if (!pres.generators().contains(m.gen)) {
            throw TietzeError("generator '" + m.gen.name() + "' not present");
          }
          auto occurrences = [&](Word const& w) {
            std::size_t n = 0;
            for (auto const& l : w) {
              n += l.gen() == m.gen ? 1 : 0;
            }
            return n;
          };
          std::optional<std::size_t> k = m.relator;
          if (k) {
            detail::check_index(pres, *k, "relator");
            if (occurrences(rels[*k]) != 1) {
              throw TietzeError("generator '" + m.gen.name()
                                + "' does not occur exactly once in "
                                + detail::rel(*k));
            }
          } else {
            for (std::size_t i = 0; i < rels.size() && !k; ++i) {
              if (occurrences(rels[i]) == 1) {
                k = i;
              }
            }
            if (!k) {
              throw TietzeError("no relator contains '" + m.gen.name()
                                + "' exactly once");
            }
          }
          auto const& r = rels[*k];
          std::size_t pos = 0;
          while (r[pos].gen() != m.gen) {
            ++pos;
          }
          // r ~ g^e W  =>  g = W^-e
          Word w = r.slice(pos + 1, r.size() - pos - 1) * r.slice(0, pos);
          Word image = r[pos].sign() > 0 ? w.inverse() : w;
          std::vector<Word> out;
          for (std::size_t i = 0; i < rels.size(); ++i) {
            if (i != *k) {
              out.push_back(detail::substitute_generator(rels[i], m.gen, image));
            }
          }
          std::vector<Generator> gens;
          for (auto const& g : pres.generators()) {
            if (g != m.gen) {
              gens.push_back(g);
            }
          }
          return {Presentation(Alphabet(std::move(gens)), std::move(out)),
                  "removed generator " + m.gen.name() + " = "
                      + format_word(image) + " using " + detail::rel(*k)};

        } else if constexpr (std::is_same_v<M, Duplicate>) {
          detail::check_index(pres, m.relator, "relator");
          rels.push_back(rels[m.relator]);
          return {detail::with_relators(pres, std::move(rels)),
                  detail::rel(m.relator) + " duplicated"};

        } else if constexpr (std::is_same_v<M, RemoveRelator>) {
          detail::check_index(pres, m.relator, "relator");
          auto const& r = rels[m.relator];
          bool redundant = r.is_identity();
          for (std::size_t i = 0; i < rels.size() && !redundant; ++i) {
            redundant = i != m.relator
                        && detail::conjugate_up_to_inverse(r, rels[i]);
          }
          if (!redundant) {
            throw TietzeError(detail::rel(m.relator)
                              + " is neither trivial nor a conjugate of another "
                                "relator");
          }
          rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(m.relator));
          return {detail::with_relators(pres, std::move(rels)),
                  detail::rel(m.relator) + " removed as redundant"};

        } else {
          static_assert(std::is_same_v<M, Rename>);
          if (!pres.generators().contains(m.from)) {
            throw TietzeError("generator '" + m.from.name() + "' not present");
          }
          if (pres.generators().contains(m.to)) {
            throw TietzeError("generator '" + m.to.name() + "' is not fresh");
          }
          std::vector<Generator> gens;
          for (auto const& g : pres.generators()) {
            gens.push_back(g == m.from ? m.to : g);
          }
          for (auto& r : rels) {
            r = detail::substitute_generator(r, m.from, Word::of(m.to));
          }
          return {Presentation(Alphabet(std::move(gens)), std::move(rels)),
                  "renamed " + m.from.name() + " to " + m.to.name()};
        }
      },
      move);
}

// Equality up to generator order, relator order, and replacing relators by
// cyclic conjugates or inverses.
inline bool equivalent_up_to_normalization(Presentation const& a,
                                           Presentation const& b) {
  auto sorted_gens = [](Presentation const& p) {
    auto g = p.generators().generators();
    std::sort(g.begin(), g.end());
    return g;
  };
  if (sorted_gens(a) != sorted_gens(b)) {
    return false;
  }
  auto normal = [](Presentation const& p) {
    std::vector<Word> out;
    for (auto const& r : p.relators()) {
      out.push_back(cyclic_normal_form(r));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return normal(a) == normal(b);
}

// ---------------------------------------------------------------------------
// Scripts

struct TietzeScript {
  Presentation initial;
  std::vector<TietzeMove> moves;
  std::optional<Presentation> expected;
  bool operator==(TietzeScript const&) const = default;
};

struct ReplayResult {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // 0-based move index
  std::string reason;
  std::vector<std::string> transcript;
  Presentation result;
};

// Applies the moves in order. Each step is also checked to leave the
// abelianization unchanged.
inline ReplayResult replay(Presentation const& initial,
                           std::vector<TietzeMove> const& script,
                           std::optional<Presentation> const& expected) {
  ReplayResult out;
  Presentation cur = initial;
  auto const ab = abelianization(initial);
  for (std::size_t i = 0; i < script.size(); ++i) {
    std::string prefix = "step " + std::to_string(i) + ": ";
    try {
      auto step = tietze_apply(cur, script[i]);
      if (abelianization(step.result) != ab) {
        throw TietzeError("abelianization changed to "
                          + abelianization(step.result).to_string());
      }
      out.transcript.push_back(prefix + step.transcript);
      cur = std::move(step.result);
    } catch (Error const& e) {
      out.failed_step = i;
      out.reason = e.what();
      out.transcript.push_back(prefix + "FAILED: " + e.what());
      out.result = std::move(cur);
      return out;
    }
  }
  out.result = cur;
  if (expected && !equivalent_up_to_normalization(cur, *expected)) {
    out.reason = "final presentation differs from the expected one";
    out.transcript.push_back("result: " + out.reason);
    return out;
  }
  out.ok = true;
  out.transcript.push_back(expected ? "result: matches expected presentation"
                                    : "result: all moves valid");
  return out;
}

inline ReplayResult replay(TietzeScript const& script) {
  return replay(script.initial, script.moves, script.expected);
}

// ---------------------------------------------------------------------------
// Text format. One move per line, arguments separated by '|':
//
//   free-equal 0 | <word>
//   cyclic 0 | 3
//   invert 0
//   conjugate 0 | <word>
//   substitute <target> | <source> | <occurrence> | <old> | <new>
//   add-generator x | <word>
//   remove-generator d          remove-generator d | 1
//   duplicate 0
//   remove-relator 2
//   rename a | b
//
// A script file has [initial], [moves] and optional [expected] sections;
// the presentation sections use the presentation file format.

inline std::string format_move(TietzeMove const& move) {
  using namespace tietze;
  auto n = [](std::size_t i) { return std::to_string(i); };
  return std::visit(
      [&](auto const& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FreeEqual>) {
          return "free-equal " + n(m.relator) + " | " + format_word(m.replacement);
        } else if constexpr (std::is_same_v<M, CyclicPermutation>) {
          return "cyclic " + n(m.relator) + " | " + n(m.shift);
        } else if constexpr (std::is_same_v<M, Invert>) {
          return "invert " + n(m.relator);
        } else if constexpr (std::is_same_v<M, Conjugate>) {
          return "conjugate " + n(m.relator) + " | " + format_word(m.by);
        } else if constexpr (std::is_same_v<M, Substitute>) {
          return "substitute " + n(m.target) + " | " + n(m.source) + " | "
                 + n(m.occurrence) + " | " + format_word(m.old_part) + " | "
                 + format_word(m.new_part);
        } else if constexpr (std::is_same_v<M, AddGenerator>) {
          return "add-generator " + m.gen.name() + " | " + format_word(m.definition);
        } else if constexpr (std::is_same_v<M, RemoveGenerator>) {
          return "remove-generator " + m.gen.name()
                 + (m.relator ? " | " + n(*m.relator) : std::string());
        } else if constexpr (std::is_same_v<M, Duplicate>) {
          return "duplicate " + n(m.relator);
        } else if constexpr (std::is_same_v<M, RemoveRelator>) {
          return "remove-relator " + n(m.relator);
        } else {
          return "rename " + m.from.name() + " | " + m.to.name();
        }
      },
      move);
}

namespace detail {

inline std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto bar = s.find('|', start);
    out.emplace_back(trim(s.substr(start, bar == std::string_view::npos
                                              ? std::string_view::npos
                                              : bar - start)));
    if (bar == std::string_view::npos) {
      break;
    }
    start = bar + 1;
  }
  return out;
}

inline std::size_t parse_index(std::string const& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos
      || s.size() > 9) {
    throw ParseError("expected a non-negative index, found '" + s + "'", 0);
  }
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace detail

inline TietzeMove parse_move(std::string_view line) {
  using namespace tietze;
  line = detail::trim(line);
  auto sp = line.find_first_of(" \t");
  std::string kind(line.substr(0, sp));
  auto args = sp == std::string_view::npos
                  ? std::vector<std::string>{}
                  : detail::split_args(line.substr(sp + 1));
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError("'" + kind + "' takes " + std::to_string(count)
                           + " argument(s), got " + std::to_string(args.size()),
                       0);
    }
  };
  auto gen = [](std::string const& s) {
    if (!Generator::valid_name(s)) {
      throw ParseError("invalid generator name '" + s + "'", 0);
    }
    return Generator(s);
  };
  using detail::parse_index;

  if (kind == "free-equal") {
    want(2);
    return FreeEqual{parse_index(args[0]), parse_word(args[1])};
  }
  if (kind == "cyclic") {
    want(2);
    return CyclicPermutation{parse_index(args[0]), parse_index(args[1])};
  }
  if (kind == "invert") {
    want(1);
    return Invert{parse_index(args[0])};
  }
  if (kind == "conjugate") {
    want(2);
    return Conjugate{parse_index(args[0]), parse_word(args[1])};
  }
  if (kind == "substitute") {
    want(5);
    return Substitute{parse_index(args[0]), parse_index(args[1]),
                      parse_index(args[2]), parse_word(args[3]),
                      parse_word(args[4])};
  }
  if (kind == "add-generator") {
    want(2);
    return AddGenerator{gen(args[0]), parse_word(args[1])};
  }
  if (kind == "remove-generator") {
    if (args.size() == 1) {
      return RemoveGenerator{gen(args[0]), std::nullopt};
    }
    want(2);
    return RemoveGenerator{gen(args[0]), parse_index(args[1])};
  }
  if (kind == "duplicate") {
    want(1);
    return Duplicate{parse_index(args[0])};
  }
  if (kind == "remove-relator") {
    want(1);
    return RemoveRelator{parse_index(args[0])};
  }
  if (kind == "rename") {
    want(2);
    return Rename{gen(args[0]), gen(args[1])};
  }
  throw ParseError("unknown move '" + kind + "'", 0);
}

inline std::string format_script(TietzeScript const& s) {
  std::string out = "[initial]\n" + format_presentation(s.initial) + "[moves]\n";
  for (auto const& m : s.moves) {
    out += format_move(m) + '\n';
  }
  if (s.expected) {
    out += "[expected]\n" + format_presentation(*s.expected);
  }
  return out;
}

inline TietzeScript parse_script(std::string_view text) {
  auto lines = split_lines(text);
  enum class Section { none, initial, moves, expected } section = Section::none;
  std::vector<std::string> initial, expected;
  std::size_t initial_at = 0, expected_at = 0;
  bool have_initial = false, have_expected = false;
  TietzeScript script;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line == "[initial]") {
      section = Section::initial;
      have_initial = true;
      initial_at = i + 1;
      continue;
    }
    if (line == "[moves]") {
      section = Section::moves;
      continue;
    }
    if (line == "[expected]") {
      section = Section::expected;
      have_expected = true;
      expected_at = i + 1;
      continue;
    }
    switch (section) {
      case Section::none:
        if (!line.empty() && line.front() != '#') {
          throw ParseError("line " + std::to_string(i + 1)
                               + ": content before the first section",
                           0);
        }
        break;
      case Section::initial:
        initial.emplace_back(line);
        break;
      case Section::expected:
        expected.emplace_back(line);
        break;
      case Section::moves:
        if (!line.empty() && line.front() != '#') {
          try {
            script.moves.push_back(parse_move(line));
          } catch (ParseError const& e) {
            throw ParseError("line " + std::to_string(i + 1) + ": " + e.message(),
                             e.position());
          }
        }
        break;
    }
  }
  if (!have_initial) {
    throw ParseError("missing [initial] section", 0);
  }
  script.initial = parse_presentation_lines(initial, initial_at);
  if (have_expected) {
    script.expected = parse_presentation_lines(expected, expected_at);
  }
  return script;
}

}  // namespace gtorsion
