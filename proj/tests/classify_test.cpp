#include "pmod04/classify.hpp"

#include <map>
#include <set>

#include <doctest.h>

#include "pmod04/census.hpp"
#include "test_util.hpp"

using namespace pmod04;
using pmod04::testing::random_reduced_word_upto;

namespace {

Word rebuild(const ReducibleForm& f) {
  return multiply(
      multiply(f.conjugator, power(axis_word(f.axis), f.exponent)),
      invert(f.conjugator));
}

}  // namespace

TEST_CASE("classification of the pinned examples") {
  CHECK(classify(Word{}).type == MappingClassType::Identity);
  CHECK_FALSE(classify(Word{}).reducible.has_value());

  auto c = classify(parse_word("aaa"));
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->axis == Axis::A);
  CHECK(c.reducible->exponent == 3);
  CHECK(c.reducible->conjugator == Word{});

  c = classify(parse_word("baaB"));
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->axis == Axis::A);
  CHECK(c.reducible->exponent == 2);
  CHECK(c.reducible->conjugator == parse_word("b"));

  c = classify(parse_word("ab"));
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->axis == Axis::AB);
  CHECK(c.reducible->exponent == 1);
  CHECK(c.reducible->conjugator == Word{});

  CHECK(classify(parse_word("aB")).type == MappingClassType::PseudoAnosov);
  CHECK(classify(parse_word("Ab")).type == MappingClassType::PseudoAnosov);

  c = classify(parse_word("baB"));
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->axis == Axis::A);
  CHECK(c.reducible->exponent == 1);
  CHECK(c.reducible->conjugator == parse_word("b"));
}

TEST_CASE("axis power form") {
  auto f = axis_power_form(parse_word("BA"));
  REQUIRE(f.has_value());
  CHECK(f->axis == Axis::AB);
  CHECK(f->exponent == -1);
  CHECK(f->conjugator == Word{});

  // unreduced spelling a(ba)A of ab
  f = axis_power_form(parse_word("abaA"));
  REQUIRE(f.has_value());
  CHECK(f->axis == Axis::AB);
  CHECK(f->exponent == 1);
  CHECK(f->conjugator == Word{});

  f = axis_power_form(parse_word("baB"));
  REQUIRE(f.has_value());
  CHECK(f->axis == Axis::A);
  CHECK(f->exponent == 1);
  CHECK(f->conjugator == parse_word("b"));

  CHECK_FALSE(axis_power_form(parse_word("aB")).has_value());
  CHECK_FALSE(axis_power_form(Word{}).has_value());
}

TEST_CASE("rotated cores get the canonical minimal conjugator") {
  // ba is conjugate to ab two ways by a single letter; A wins the tie
  auto c = classify(parse_word("ba"));
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->axis == Axis::AB);
  CHECK(c.reducible->exponent == 1);
  CHECK(c.reducible->conjugator == parse_word("A"));
  CHECK(rebuild(*c.reducible) == parse_word("ba"));

  c = classify(parse_word("AB"));  // (a^-1 b^-1)^1, the rotated inverse power
  REQUIRE(c.type == MappingClassType::Reducible);
  CHECK(c.reducible->exponent == -1);
  CHECK(c.reducible->conjugator == parse_word("A"));
  CHECK(rebuild(*c.reducible) == parse_word("AB"));
}

TEST_CASE("exhaustive trichotomy and round trip on small spheres") {
  for (int n = 0; n <= 7; ++n) {
    for (const Word& w : sphere_words(n)) {
      Classification c = classify(w);
      // exactly one tag, and the span variant agrees
      SpanClassification s = classify_span(w.letters());
      CHECK(s.type == c.type);
      if (c.type == MappingClassType::Identity) CHECK(w.empty());
      if (c.type == MappingClassType::Reducible) {
        REQUIRE(c.reducible.has_value());
        CHECK(c.reducible->exponent != 0);
        CHECK(s.axis == c.reducible->axis);
        CHECK(s.exponent == c.reducible->exponent);
        CHECK(is_reduced(c.reducible->conjugator.letters()));
        CHECK(rebuild(*c.reducible) == w);
      } else {
        CHECK_FALSE(c.reducible.has_value());
      }
    }
  }
}

TEST_CASE("reducible words on small spheres match the brute-force conjugates") {
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> from_classifier;
    for (const Word& w : sphere_words(n))
      if (classify(w).type == MappingClassType::Reducible)
        from_classifier.insert(to_string(w));

    std::set<std::string> from_bruteforce;
    for (Axis axis : {Axis::A, Axis::B, Axis::AB})
      for (const std::string& s : bruteforce_conjugacy_set(axis, n))
        from_bruteforce.insert(s);

    CHECK(from_classifier == from_bruteforce);
  }
}

TEST_CASE("classification symmetries on random words") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 4000; ++i) {
    Word w = random_reduced_word_upto(rng, 24);
    Word u = random_reduced_word_upto(rng, 10);
    Classification c = classify(w);

    // conjugation invariance
    Classification cc = classify(multiply(multiply(u, w), invert(u)));
    CHECK(cc.type == c.type);
    if (c.type == MappingClassType::Reducible) {
      CHECK(cc.reducible->axis == c.reducible->axis);
      CHECK(cc.reducible->exponent == c.reducible->exponent);
    }

    // inverse: same tag and axis, negated exponent
    Classification ci = classify(invert(w));
    CHECK(ci.type == c.type);
    if (c.type == MappingClassType::Reducible) {
      CHECK(ci.reducible->axis == c.reducible->axis);
      CHECK(ci.reducible->exponent == -c.reducible->exponent);
    }

    // generator swap: A and B trade places, AB stays
    Classification cs = classify(swap_generators(w));
    CHECK(cs.type == c.type);
    if (c.type == MappingClassType::Reducible) {
      Axis expect = c.reducible->axis == Axis::A   ? Axis::B
                    : c.reducible->axis == Axis::B ? Axis::A
                                                   : Axis::AB;
      CHECK(cs.reducible->axis == expect);
      CHECK(cs.reducible->exponent == c.reducible->exponent);
    }
  }
}

TEST_CASE("classification JSON") {
  CHECK(classification_json(classify(parse_word("abA"))) ==
        R"({"type":"reducible","axis":"B","exponent":1,"conjugator":"a"})");
  CHECK(classification_json(classify(parse_word("aB"))) ==
        R"({"type":"pseudo_anosov"})");
  CHECK(classification_json(classify(Word{})) == R"({"type":"identity"})");
}
