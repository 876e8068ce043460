#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "gtorsion/dehn_twist.hpp"
#include "gtorsion/presentation.hpp"
#include "gtorsion/presets.hpp"
#include "gtorsion/quotient.hpp"
#include "gtorsion/smith.hpp"
#include "gtorsion/word_io.hpp"
#include "oracles.hpp"

using namespace gtorsion;

namespace {

Word W(std::string const& s) { return parse_word(s); }

oracle::AbelianGroup oracle_abelianization(Presentation const& p) {
  std::vector<std::vector<oracle::Big>> m;
  for (auto const& r : p.relators()) {
    std::vector<oracle::Big> row;
    for (auto const& g : p.generators()) {
      long e = 0;
      for (auto const& l : r) {
        e += l.gen() == g ? l.sign() : 0;
      }
      row.emplace_back(e);
    }
    m.push_back(std::move(row));
  }
  return oracle::abelian_group(m, p.generators().size());
}

void check_against_oracle(Presentation const& p) {
  auto const mine = abelianization(p);
  auto const ref = oracle_abelianization(p);
  REQUIRE(mine.free_rank == ref.free_rank);
  REQUIRE(mine.torsion.size() == ref.torsion.size());
  for (std::size_t i = 0; i < ref.torsion.size(); ++i) {
    REQUIRE(oracle::Big(mine.torsion[i]) == ref.torsion[i]);
  }
}

// Evaluates a word on explicit 0-based image arrays, acting on the right.
std::vector<int> oracle_eval(Word const& w, std::vector<std::string> const& names,
                             std::vector<std::vector<int>> const& images, int n) {
  std::vector<int> pt(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pt[static_cast<std::size_t>(i)] = i;
  }
  for (auto const& l : w) {
    std::size_t k = 0;
    while (names[k] != l.gen().name()) {
      ++k;
    }
    auto const& img = images[k];
    for (auto& x : pt) {
      if (l.sign() > 0) {
        x = img[static_cast<std::size_t>(x)];
      } else {
        int y = 0;
        while (img[static_cast<std::size_t>(y)] != x) {
          ++y;
        }
        x = y;
      }
    }
  }
  return pt;
}

}  // namespace

TEST_CASE("link presentation examples", "[presentation]") {
  auto p = preset_link_presentation(1, 1);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == W("[b, a b a^3 b a]"));
  CHECK(preset_link_presentation(0, 1).relators()[0] == W("[b, a^3]"));
  CHECK(exponent_sum(link_inner_word(2, 2), Generator("a")) == 8);
  CHECK_THROWS_AS(preset_link_presentation(-1, 1), DomainError);
  CHECK_THROWS_AS(preset_link_presentation(1, 0), DomainError);
}

TEST_CASE("w_{q,n} matches the displayed word and is equivalent", "[presentation]") {
  // Built here from the displayed text with q, n substituted.
  auto displayed = [](long q, long n) {
    std::string const Q = std::to_string(q), N = std::to_string(n + 2);
    return W("a (b^-1 a^-1)^" + Q + " b^-1 (a b)^" + Q + " a^" + N + " b (a b)^" + Q
             + " (a^-1 b^-1)^" + Q + " a^-1 a^-" + N);
  };
  for (long q = 1; q <= 5; ++q) {
    for (long n = 1; n <= 5; ++n) {
      CHECK(preset_w_qn(q, n) == displayed(q, n));
      CHECK(check_relator_equivalence(q, n));
    }
  }
  Word mutated = preset_w_qn(1, 1);
  std::vector<Letter> letters(mutated.begin(), mutated.end());
  letters[3] = letters[3].inverse();
  CHECK_FALSE(relators_equivalent(Word(letters),
                                  preset_link_presentation(1, 1).relators()[0]));
}

TEST_CASE("twisted torus presentation examples", "[presentation]") {
  auto p = preset_twisted_torus_presentation(2, 1, 1);
  CHECK(p.relators()[0] == W("a^3 (a^-1 c) a^2") * W("c^2 (a^-1 c) c").inverse());
  CHECK(p.generators() == Alphabet{"a", "c"});
  CHECK_THROWS_AS(preset_twisted_torus_presentation(1, 1, 1), DomainError);
  CHECK_THROWS_AS(preset_twisted_torus_presentation(2, 0, 1), DomainError);
  CHECK_THROWS_AS(preset_twisted_torus_presentation(2, 1, 0), DomainError);
}

TEST_CASE("s = 1 relator is c^gamma = w(a^-1, c)", "[presentation]") {
  for (long p = 2; p <= 4; ++p) {
    for (long m = 1; m <= 3; ++m) {
      long const gamma = (p - 2) * m + 1;
      Word const rel = W("c^" + std::to_string(gamma)) * twisted_torus_s1_w(p, m).inverse();
      CHECK(relators_equivalent(rel, preset_twisted_torus_presentation(p, m, 1).relators()[0]));
    }
  }
}

TEST_CASE("abelianization examples", "[presentation][smith]") {
  auto ab = abelianization(preset_link_presentation(2, 3));
  CHECK(ab.free_rank == 2);
  CHECK(ab.torsion.empty());
  ab = abelianization(preset_pretzel_presentation(1));
  CHECK(ab.is_infinite_cyclic());
  ab = abelianization(Presentation(Alphabet{"a"}, {W("a^5")}));
  CHECK(ab.free_rank == 0);
  CHECK(ab.torsion == std::vector<long>{5});
  CHECK(ab.to_string() == "Z/5");
  ab = abelianization(Presentation(Alphabet{"a", "b", "c"},
                                   {W("a^2 b^4"), W("a^6 b^2 c^6")}));
  CHECK(ab.to_string() == "Z + Z/2 + Z/2");
  CHECK(abelianization(Presentation(Alphabet{}, {})).to_string() == "0");
}

TEST_CASE("abelianization agrees with the determinantal-divisor oracle", "[presentation][smith]") {
  for (long q = 0; q <= 3; ++q) {
    for (long n = 1; n <= 3; ++n) {
      check_against_oracle(preset_link_presentation(q, n));
    }
  }
  for (long p = 2; p <= 3; ++p) {
    for (long m = 1; m <= 2; ++m) {
      for (long s = 1; s <= 2; ++s) {
        check_against_oracle(preset_twisted_torus_presentation(p, m, s));
        check_against_oracle(svk_presentation(p, m, s));
      }
    }
  }
  check_against_oracle(Presentation(Alphabet{"a", "b", "c"},
                                    {W("a^4 b^6 c^-2"), W("a^-6 b^10 c^14"), W("a^2 c^8")}));
}

TEST_CASE("Smith normal form kernel columns", "[smith]") {
  IntMatrix m{{BigInt(7), BigInt(-2)}};
  auto const snf = smith_normal_form(m, 2);
  REQUIRE(snf.rank == 1);
  BigInt const k0 = snf.column_transform[0][1];
  BigInt const k1 = snf.column_transform[1][1];
  CHECK(7 * k0 - 2 * k1 == 0);
  CHECK(abs(k0) == 2);
  CHECK(abs(k1) == 7);
}

TEST_CASE("quotient search: free group", "[presentation][quotient]") {
  Presentation const free(Alphabet{"a", "b"}, {});
  auto w = find_nonabelian_quotient(free, W("a"), W("b"));
  REQUIRE(w.has_value());
  CHECK(w->degree == 3);
  CHECK(verify_hom(free, *w));
}

TEST_CASE("quotient search: abelian group has none", "[presentation][quotient]") {
  Presentation const ab(Alphabet{"a", "b"}, {W("[a,b]")});
  for (int d = 2; d <= 6; ++d) {
    CHECK_FALSE(find_nonabelian_quotient(ab, W("a"), W("b"), d).has_value());
  }
}

TEST_CASE("quotient search: link family witnesses", "[presentation][quotient]") {
  std::vector<std::string> const names{"a", "b"};
  for (long q = 1; q <= 3; ++q) {
    for (long n = 1; n <= 3; ++n) {
      auto const pres = preset_link_presentation(q, n);
      auto const w = find_nonabelian_quotient(pres, W("b"), W("a"));
      REQUIRE(w.has_value());
      CHECK(w->degree <= 7);
      CHECK(verify_hom(pres, *w));
      // Oracle evaluation on raw arrays.
      std::vector<std::vector<int>> images{w->image_of(Generator("a"))->images(),
                                           w->image_of(Generator("b"))->images()};
      int const deg = static_cast<int>(w->degree);
      auto const rel = oracle_eval(pres.relators()[0], names, images, deg);
      for (int i = 0; i < deg; ++i) {
        REQUIRE(rel[static_cast<std::size_t>(i)] == i);
      }
      CHECK(oracle_eval(W("a b"), names, images, deg)
            != oracle_eval(W("b a"), names, images, deg));
    }
  }
}

TEST_CASE("quotient search is deterministic", "[presentation][quotient]") {
  auto const pres = preset_link_presentation(2, 3);
  auto const w1 = find_nonabelian_quotient(pres, W("b"), W("a"));
  auto const w2 = find_nonabelian_quotient(pres, W("b"), W("a"));
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
}

TEST_CASE("quotient search guards", "[presentation][quotient]") {
  Presentation const four(Alphabet{"a", "b", "c", "d"}, {});
  CHECK_THROWS_AS(find_nonabelian_quotient(four, W("a"), W("b")), DomainError);
  Presentation const two(Alphabet{"a", "b"}, {});
  CHECK_THROWS_AS(find_nonabelian_quotient(two, W("a"), W("b"), 1), DomainError);
  CHECK_THROWS_AS(find_nonabelian_quotient(two, W("a"), W("b"), 10), DomainError);
  CHECK_THROWS_AS(find_nonabelian_quotient(two, W("a"), W("z")), DomainError);
}

TEST_CASE("verify_hom on a hand witness onto S3", "[presentation][quotient]") {
  Presentation const s3(Alphabet{"a", "b"}, {W("a^2"), W("b^2"), W("(a b)^3")});
  HomWitness w;
  w.degree = 3;
  w.images = {{Generator("a"), Permutation::from_one_based({2, 1, 3})},
              {Generator("b"), Permutation::from_one_based({1, 3, 2})}};
  w.u = W("a");
  w.v = W("b");
  CHECK(verify_hom(s3, w));

  auto broken = w;
  broken.images[1].second = Permutation(3);
  CHECK_FALSE(verify_hom(s3, broken));

  auto wrong_degree = w;
  wrong_degree.images[0].second = Permutation::from_one_based({2, 1, 3, 4});
  CHECK_FALSE(verify_hom(s3, wrong_degree));

  auto missing = w;
  missing.images.pop_back();
  CHECK_FALSE(verify_hom(s3, missing));

  Presentation const z6(Alphabet{"a", "b"}, {W("a^2"), W("b^3"), W("[a,b]")});
  CHECK_FALSE(verify_hom(z6, w));
}

TEST_CASE("presentation file format", "[presentation][parse]") {
  std::string const text =
      "# link group\n"
      "generators: a b\n"
      "relator: [b, a b a^3 b a]\n"
      "\n"
      "relator: a^2 = b^3\n";
  auto const p = parse_presentation(text);
  CHECK(p.generators() == Alphabet{"a", "b"});
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[1] == W("a^2 b^-3"));
  auto const again = parse_presentation(format_presentation(p));
  CHECK(again == p);
  CHECK(format_presentation(again) == format_presentation(p));
}

TEST_CASE("presentation file errors", "[presentation][parse]") {
  auto message_of = [](std::string const& text) {
    try {
      parse_presentation(text);
    } catch (ParseError const& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("relator: a\n").find("line 1") != std::string::npos);
  CHECK(message_of("generators: a\nrelator: a b\n").find("line 2") != std::string::npos);
  CHECK(message_of("generators: a a\n") != "no error");
  CHECK(message_of("generators: a\nfoo: a\n").find("line 2") != std::string::npos);
  CHECK(message_of("generators: a\nrelator: a = = a\n") != "no error");
}

TEST_CASE("presentations reject undeclared generators", "[presentation]") {
  CHECK_THROWS_AS(Presentation(Alphabet{"a"}, {W("a b")}), DomainError);
}
