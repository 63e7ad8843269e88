#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gtg/word.hpp"

using namespace gtg;

namespace {

Word w332(const std::string& s) { return parse_word(s, FactorSpec::z3z3()); }
Word w232(const std::string& s) { return parse_word(s, FactorSpec::z2z3()); }

Word random_word(std::mt19937& rng, FactorSpec spec, int k) {
  std::vector<uint8_t> exps;
  for (int i = 0; i < k; ++i) {
    exps.push_back(spec.p == 2 ? 1 : static_cast<uint8_t>(1 + rng() % 2));
    exps.push_back(static_cast<uint8_t>(1 + rng() % 2));
  }
  return word_from_exponents(exps, spec);
}

std::set<std::string> orbit_strings(const Word& w) {
  std::set<std::string> out;
  for (const auto& m : equivalence_orbit(w)) out.insert(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("parse: direct tokenization") {
  Word w = w332("xyxy2");
  REQUIRE(w.syllable_length() == 4);
  CHECK(w.syllables()[0] == Syllable{Factor::First, 1});
  CHECK(w.syllables()[1] == Syllable{Factor::Second, 1});
  CHECK(w.syllables()[2] == Syllable{Factor::First, 1});
  CHECK(w.syllables()[3] == Syllable{Factor::Second, 2});
  CHECK(w.pair_length() == 2);
  CHECK(w.to_string() == "xyxy2");
  CHECK(w.to_string(true) == "xyxy^2");
}

TEST_CASE("parse: parenthesized powers expand") {
  Word w = w232("(uv)^3(uv2)");
  CHECK(w.to_string() == "uvuvuvuv2");
  CHECK(w.pair_length() == 4);
  CHECK(parse_word("(uv)^3(uv2)").spec() == FactorSpec::z2z3());
}

TEST_CASE("parse: exponents reduce mod the factor order") {
  Word w = w332("x^2y^4");
  CHECK(w.to_string() == "x2y");
  CHECK(w332("y2^4x").to_string() == "xy2");  // (y^2)^4 = y^8 = y^2, rotated to x first
}

TEST_CASE("parse: free and cyclic reduction") {
  CHECK(w332("xyx2x2y").to_string() == "xyxy");        // x2x2 = x4 = x
  CHECK(w332("xyx2").to_string() == "y");              // cyclic merge kills x-syllables
  CHECK(w232("uvu").to_string() == "v");
  CHECK(w332("yx").to_string() == "xy");               // rotated to First-first
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(w332("x^3y"), ParseError);      // vanishing syllable
  CHECK_THROWS_AS(w232("u2v"), ParseError);       // u has order 2
  CHECK_THROWS_AS(w332("xx2"), ParseError);       // trivial word
  CHECK_THROWS_AS(w332("xu"), ParseError);        // mixed alphabets
  CHECK_THROWS_AS(parse_word("xyu"), ParseError);
  CHECK_THROWS_AS(w332("(xy"), ParseError);
  CHECK_THROWS_AS(w332("x3"), ParseError);        // only digit 2 exists
  CHECK_THROWS_AS(w332(""), ParseError);
  CHECK_THROWS_AS(w332("x^"), ParseError);
  CHECK_THROWS_AS(parse_word("uv", FactorSpec::z3z3()), ParseError);  // case mismatch
}

TEST_CASE("equivalence orbit of xy") {
  auto orbit = orbit_strings(w332("xy"));
  CHECK(orbit == std::set<std::string>{"xy", "x2y2", "xy2", "x2y"});
}

TEST_CASE("equivalence orbit of uvuv") {
  auto orbit = orbit_strings(w232("uvuv"));
  CHECK(orbit == std::set<std::string>{"uvuv", "uv2uv2"});
}

TEST_CASE("orbit closure is idempotent and preserves pair length") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    FactorSpec spec = iter % 2 ? FactorSpec::z3z3() : FactorSpec::z2z3();
    int k = 1 + static_cast<int>(rng() % 8);
    Word w = random_word(rng, spec, k);
    auto orbit = equivalence_orbit(w);
    size_t bound = spec.p == 2 ? 4 * w.pair_length() : 16 * w.pair_length();
    CHECK(orbit.size() <= bound);
    for (const auto& m : orbit) CHECK(m.pair_length() == w.pair_length());
    // closure from any member gives the same set
    auto base = orbit_strings(w);
    CHECK(orbit_strings(orbit[rng() % orbit.size()]) == base);
  }
}

TEST_CASE("canonicalize identifies equivalent words") {
  CHECK(canonicalize(w332("x2y2")) == canonicalize(w332("xy")));
  CHECK(canonicalize(w232("uv2uv2")) == canonicalize(w232("uvuv")));
  CHECK(canonicalize(w332("x2y2")).to_string() == "xy");
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    FactorSpec spec = iter % 2 ? FactorSpec::z3z3() : FactorSpec::z2z3();
    Word w = random_word(rng, spec, 1 + static_cast<int>(rng() % 6));
    auto key = canonicalize(w);
    CHECK(canonicalize(key.word()) == key);
    CHECK(equivalent(w, key.word()));
  }
}

TEST_CASE("pair lists match the published encodings") {
  PairList l31{PairList::Kind::Standard, {3, 1}};
  CHECK(word_of_pairlist(l31, FactorSpec::z2z3()).to_string() == "uvuvuvuv2");
  PairList l42{PairList::Kind::Standard, {4, 2}};
  CHECK(word_of_pairlist(l42, FactorSpec::z2z3()).to_string() == "uvuvuvuvuv2uv2");

  CHECK(pairlist_of_word(w232("uvuvuvuv2")) == l31);
  CHECK(pairlist_of_word(w232("uvuvuvuvuv2uv2")) == l42);
}

TEST_CASE("pure powers give the degenerate pair list") {
  PairList l = pairlist_of_word(w232("(uv)^3"));
  CHECK(l.kind == PairList::Kind::PureFirst);
  CHECK(l.runs == std::vector<int>{3});
  CHECK(l.to_string() == "[3 | pure-uv]");
  CHECK(word_of_pairlist(l, FactorSpec::z2z3()).to_string() == "uvuvuv");

  PairList l2 = pairlist_of_word(w232("(uv2)^4"));
  CHECK(l2.kind == PairList::Kind::PureSecond);
}

TEST_CASE("pair list requires rotation-normal position") {
  CHECK_THROWS_AS(pairlist_of_word(w232("uv2uvuvuv")), std::invalid_argument);
  Word rotated = rotate_to_pair_normal(w232("uv2uvuvuv"));
  CHECK(pairlist_of_word(rotated).runs == std::vector<int>{3, 1});
}

TEST_CASE("pair list round trip on rotation-normal words") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    Word w = random_word(rng, FactorSpec::z2z3(), 2 + static_cast<int>(rng() % 10));
    Word norm = rotate_to_pair_normal(w);
    PairList l = pairlist_of_word(norm);
    if (l.kind == PairList::Kind::Standard) {
      CHECK(word_of_pairlist(l, FactorSpec::z2z3()) == norm);
      CHECK(l.sum() == static_cast<int>(w.pair_length()));
      CHECK(l.runs.size() % 2 == 0);
    }
  }
}

TEST_CASE("push substitutes x -> uvu and x^2 -> uv^2u") {
  CHECK(push_332_to_232(w332("xy")).to_string() == "uvuv");
  CHECK(push_332_to_232(w332("xyxy2")).to_string() == "uvuvuvuv2");
  CHECK(push_332_to_232(w332("x2y")).to_string() == "uv2uv");
}

TEST_CASE("lift inverts push") {
  CHECK(lift_232_to_332(w232("uvuv"), 0).to_string() == "xy");
  CHECK(equivalent(lift_232_to_332(w232("uvuv2"), 0), w332("xy2")));
  CHECK(equivalent(lift_232_to_332(w232("uvuv2"), 0), w332("xy")));  // same class
  CHECK_THROWS_AS(lift_232_to_332(w232("uvuvuv"), 0), std::invalid_argument);  // odd k
  CHECK_THROWS_AS(lift_232_to_332(w232("uvuv"), 2), std::invalid_argument);
}

TEST_CASE("push/lift round trip") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    Word w = random_word(rng, FactorSpec::z3z3(), 1 + static_cast<int>(rng() % 10));
    Word back = lift_232_to_332(push_332_to_232(w), 0);
    CHECK(back == w);
    CHECK(canonicalize(back) == canonicalize(w));
    // the two parities land in the same class after pushing back down
    Word other = lift_232_to_332(push_332_to_232(w), 1);
    CHECK(equivalent(push_332_to_232(other), push_332_to_232(w)));
  }
}

TEST_CASE("parsing is confluent over syntactic variants") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    FactorSpec spec = iter % 2 ? FactorSpec::z3z3() : FactorSpec::z2z3();
    Word w = random_word(rng, spec, 1 + static_cast<int>(rng() % 6));
    std::string compact = w.to_string();
    std::string pretty = w.to_string(true);
    // spell exponent-2 syllables as repeated letters
    std::string split;
    for (char ch : compact) {
      if (ch == '2') {
        split += split.back();
      } else {
        split += ch;
      }
    }
    std::string wrapped = "(" + compact + ")^1";
    for (const auto& variant : {pretty, split, wrapped}) {
      CHECK(parse_word(variant, spec) == w);
    }
  }
}

TEST_CASE("word validation rejects malformed syllable lists") {
  CHECK_THROWS_AS(Word::make({{Factor::First, 1}, {Factor::First, 1}}, FactorSpec::z3z3()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Word::make({{Factor::First, 2}}, FactorSpec::z2z3()), std::invalid_argument);
  CHECK_THROWS_AS(FactorSpec::make(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(FactorSpec::make(3, 2), std::invalid_argument);
}
