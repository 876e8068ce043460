#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "gtorsion/braid.hpp"
#include "oracles.hpp"

using namespace gtorsion;

namespace {

std::vector<int> indices_of(Braid const& b) {
  std::vector<int> out;
  for (auto const& l : b.word()) {
    out.push_back(l.index);
  }
  return out;
}

Braid random_braid(std::mt19937_64& rng, int strands, std::size_t max_len) {
  std::vector<BraidLetter> w(rng() % (max_len + 1));
  for (auto& l : w) {
    l.index = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
    l.sign = rng() % 2 == 0 ? 1 : -1;
  }
  return Braid(strands, w);
}

}  // namespace

TEST_CASE("braid construction", "[braid]") {
  Braid const b(3, {{1, 1}, {2, -1}});
  CHECK(b.strands() == 3);
  CHECK(b.length() == 2);
  CHECK(b.exponent_sum() == 0);
  CHECK_FALSE(b.is_positive());
  CHECK_THROWS_AS(Braid(1, {}), DomainError);
  CHECK_THROWS_AS(Braid(3, {{3, 1}}), DomainError);
  CHECK_THROWS_AS(Braid(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Braid(3, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(Braid(3, {}) * Braid(4, {}), DomainError);
}

TEST_CASE("closure components examples", "[braid]") {
  CHECK(closure_components(parse_braid("@2 s1^3")) == 1);
  CHECK(closure_components(parse_braid("@2 s1^2")) == 2);
  CHECK(closure_components(parse_braid("@3")) == 3);
  CHECK(closure_components(parse_braid("@3 s1 s2")) == 1);
  CHECK(closure_components(parse_braid("@3 s1 s2^-1 s1")) == 2);
}

TEST_CASE("genus examples", "[braid]") {
  CHECK(positive_braid_genus(parse_braid("@2 s1^3")) == 1);
  CHECK(positive_braid_genus(preset_kq_braid(2, 3)) == 2);
  CHECK(positive_braid_genus(preset_twisted_torus_braid(2, 1, 1)) == 5);
  CHECK_THROWS_AS(positive_braid_genus(parse_braid("@2 s1^-3")), DomainError);
  CHECK_THROWS_AS(positive_braid_genus(parse_braid("@2 s1^2")), DomainError);
}

TEST_CASE("preset braids", "[braid]") {
  auto const k = preset_kq_braid(1, 2);
  CHECK(k.strands() == 6);
  CHECK(k.length() == 7);
  CHECK(format_braid(k) == "@6 s1 s2 s3 s4 s5 s1 s2");
  CHECK(axis_linking_number(preset_kq_braid(1, 2)) == 6);
  CHECK(axis_linking_number(preset_kq_braid(1, 3)) == 7);
  CHECK(axis_linking_number(preset_kq_braid(1, 2)) != axis_linking_number(preset_kq_braid(1, 3)));
  CHECK_THROWS_AS(preset_kq_braid(0, 1), DomainError);
  CHECK_THROWS_AS(preset_kq_braid(1, 0), DomainError);

  auto const t = preset_twisted_torus_braid(2, 1, 1);
  CHECK(t.strands() == 5);
  CHECK(t.length() == 14);
  CHECK(t.is_positive());
  CHECK_THROWS_AS(preset_twisted_torus_braid(1, 1, 1), DomainError);
  CHECK_THROWS_AS(preset_twisted_torus_braid(2, 1, -1), DomainError);
}

TEST_CASE("K_q braid grid", "[braid]") {
  for (int q = 1; q <= 5; ++q) {
    for (int n = 1; n <= 5; ++n) {
      INFO("q=" << q << " n=" << n);
      auto const b = preset_kq_braid(q, n);
      CHECK(closure_components(b) == 1);
      CHECK(oracle::closure_cycles(b.strands(), indices_of(b)) == 1);
      CHECK(positive_braid_genus(b) == q);
      CHECK(axis_linking_number(b) == 2 * q + n + 2);
    }
  }
}

TEST_CASE("twisted torus braid grid", "[braid]") {
  for (int p = 2; p <= 3; ++p) {
    for (int m = 1; m <= 2; ++m) {
      for (int s = 0; s <= 2; ++s) {
        INFO("p=" << p << " m=" << m << " s=" << s);
        auto const b = preset_twisted_torus_braid(p, m, s);
        CHECK(b.strands() == p * (m + 1) + 1);
        CHECK(b.length() == static_cast<std::size_t>(p * (m + 1) * (p * m + 1) + 2 * s));
        CHECK(oracle::closure_cycles(b.strands(), indices_of(b)) == 1);
        CHECK(positive_braid_genus(b) == p * p * m * (m + 1) / 2 + s);
      }
    }
  }
  // K(5, 3; 2, s): torus knot T(5, 3) of genus 4 at s = 0, then s + 4.
  for (int s = 0; s <= 6; ++s) {
    CHECK(positive_braid_genus(preset_twisted_torus_braid(2, 1, s)) == s + 4);
  }
  CHECK(positive_braid_genus(preset_twisted_torus_braid(2, 1, 0)) == (5 - 1) * (3 - 1) / 2);
}

TEST_CASE("property: closure components agree with the oracle", "[braid][property]") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 500; ++i) {
    int const strands = 2 + static_cast<int>(rng() % 7);
    auto const b = random_braid(rng, strands, 30);
    REQUIRE(closure_components(b) == oracle::closure_cycles(strands, indices_of(b)));
  }
}

TEST_CASE("property: the permutation map is a homomorphism", "[braid][property]") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    int const strands = 2 + static_cast<int>(rng() % 7);
    auto const x = random_braid(rng, strands, 20);
    auto const y = random_braid(rng, strands, 20);
    REQUIRE(braid_permutation(x * y) == braid_permutation(x) * braid_permutation(y));
    REQUIRE((x * y).length() == x.length() + y.length());
    REQUIRE((x * y).exponent_sum() == x.exponent_sum() + y.exponent_sum());
  }
}

TEST_CASE("property: genus parity holds for knotted positive closures", "[braid][property]") {
  std::mt19937_64 rng(57);
  int knots = 0;
  for (int i = 0; i < 2000; ++i) {
    int const strands = 2 + static_cast<int>(rng() % 5);
    auto b = random_braid(rng, strands, 25);
    std::vector<BraidLetter> w = b.word();
    for (auto& l : w) {
      l.sign = 1;
    }
    Braid const pos(strands, w);
    if (closure_components(pos) != 1) {
      continue;
    }
    ++knots;
    long const g = positive_braid_genus(pos);
    REQUIRE(g >= 0);
    REQUIRE(2 * g == 1 - strands + static_cast<long>(pos.length()));
  }
  CHECK(knots > 100);
}

TEST_CASE("braid text", "[braid][parse]") {
  auto const b = parse_braid("@5 s1 s2 s3 s4 s1 s2");
  CHECK(b.strands() == 5);
  CHECK(b.length() == 6);
  CHECK(parse_braid("s1 s2^-2 s1^3").strands() == 3);
  CHECK(parse_braid("s1 s2^-2 s1^3").length() == 6);
  CHECK(parse_braid("").strands() == 2);
  CHECK(format_braid(parse_braid("s1 s1 s2^-1 s2^-1 s1")) == "@3 s1^2 s2^-2 s1");
  CHECK(parse_braid(format_braid(preset_twisted_torus_braid(3, 2, 2)))
        == preset_twisted_torus_braid(3, 2, 2));
  CHECK_THROWS_AS(parse_braid("@3 s3"), ParseError);
  CHECK_THROWS_AS(parse_braid("@3 t1"), ParseError);
  CHECK_THROWS_AS(parse_braid("@3 s0"), ParseError);
  CHECK_THROWS_AS(parse_braid("@3 s1^"), ParseError);
  CHECK_THROWS_AS(parse_braid("@1"), DomainError);
}

TEST_CASE("property: braid text round trip", "[braid][parse][property]") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto const b = random_braid(rng, 2 + static_cast<int>(rng() % 6), 25);
    REQUIRE(parse_braid(format_braid(b)) == b);
  }
}
