#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "divdfa/io.hpp"
#include "divdfa/minimize.hpp"
#include "divdfa/packages.hpp"

using namespace divdfa;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(DIVDFA_FIXTURE_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("text serialization round-trips exactly") {
  const Dfa canonical = build_canonical({2, 3});
  const std::string text = serialize({canonical, {}}, DfaFormat::kText);
  CHECK(parse_string(text, DfaFormat::kText).dfa == canonical);

  PackageDfa built = minimal_dfa_from_packages({6, 16});
  const DfaDocument doc{built.dfa, state_labels(built.partition)};
  CHECK(parse_string(serialize(doc, DfaFormat::kText), DfaFormat::kText).dfa ==
        built.dfa);
}

TEST_CASE("att serialization round-trips exactly") {
  for (std::uint64_t k : {1ull, 3ull, 16ull, 30ull}) {
    const Dfa canonical = build_canonical({6, k});
    const std::string att = serialize({canonical, {}}, DfaFormat::kAtt);
    CHECK(parse_string(att, DfaFormat::kAtt).dfa == canonical);
  }
  // A start state other than 0 survives the trip: its rows come first.
  const Dfa shifted(3, 2, 2, {0, 1, 1, 2, 2, 0}, {true, false, false});
  const std::string att = serialize({shifted, {}}, DfaFormat::kAtt);
  CHECK(att.rfind("2\t2\t0", 0) == 0);  // first line belongs to the start
  CHECK(parse_string(att, DfaFormat::kAtt).dfa == shifted);
}

TEST_CASE("round-trip property over the sweep") {
  for (std::uint64_t b = 2; b <= 5; ++b)
    for (std::uint64_t k = 1; k <= 30; ++k) {
      const Dfa canonical = build_canonical({b, k});
      const Dfa minimal = hopcroft_minimize(canonical).dfa;
      for (const Dfa* dfa : {&canonical, &minimal}) {
        CHECK(parse_string(serialize({*dfa, {}}, DfaFormat::kText),
                           DfaFormat::kText)
                  .dfa == *dfa);
        CHECK(parse_string(serialize({*dfa, {}}, DfaFormat::kAtt),
                           DfaFormat::kAtt)
                  .dfa == *dfa);
      }
    }
}

TEST_CASE("text parse errors carry line numbers") {
  const std::string bad_target =
      "states 2\nalphabet 1\nstart 0\naccept 0\ntrans 0 0 1\ntrans 1 0 5\n";
  CHECK_THROWS_WITH_AS(parse_string(bad_target, DfaFormat::kText),
                       doctest::Contains("line 6"), ParseError);

  const std::string bad_symbol =
      "states 1\nalphabet 1\nstart 0\naccept\ntrans 0 2 0\n";
  CHECK_THROWS_WITH_AS(parse_string(bad_symbol, DfaFormat::kText),
                       doctest::Contains("line 5"), ParseError);

  const std::string duplicate =
      "states 1\nalphabet 1\nstart 0\naccept\ntrans 0 0 0\ntrans 0 0 0\n";
  CHECK_THROWS_WITH_AS(parse_string(duplicate, DfaFormat::kText),
                       doctest::Contains("line 6"), ParseError);

  const std::string missing =
      "states 2\nalphabet 2\nstart 0\naccept 0\ntrans 0 0 1\ntrans 0 1 1\n"
      "trans 1 0 0\n";
  CHECK_THROWS_WITH_AS(parse_string(missing, DfaFormat::kText),
                       doctest::Contains("missing transition"), ParseError);

  const std::string bad_header = "states 2\nstart 0\n";
  CHECK_THROWS_WITH_AS(parse_string(bad_header, DfaFormat::kText),
                       doctest::Contains("line 2"), ParseError);

  const std::string bad_accept = "states 1\nalphabet 1\nstart 0\naccept 3\n";
  CHECK_THROWS_WITH_AS(parse_string(bad_accept, DfaFormat::kText),
                       doctest::Contains("line 4"), ParseError);
}

TEST_CASE("att parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_string("0\t1\n", DfaFormat::kAtt),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_string("0\t0\t0\n0\t0\t0\n", DfaFormat::kAtt),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_string("", DfaFormat::kAtt), ParseError);
}

TEST_CASE("comments and blank lines are ignored in text input") {
  const std::string text =
      "# canonical two-state machine\n\nstates 2\nalphabet 1\nstart 0\n"
      "accept 1\n# edges\ntrans 0 0 1\ntrans 1 0 0\n";
  const Dfa dfa = parse_string(text, DfaFormat::kText).dfa;
  CHECK(dfa.num_states() == 2);
  CHECK(dfa.accepting_states() == std::vector<State>{1});
}

TEST_CASE("dot export is presentational") {
  PackageDfa built = minimal_dfa_from_packages({6, 16});
  const DfaDocument doc{built.dfa, state_labels(built.partition)};
  const std::string dot = serialize(doc, DfaFormat::kDot);
  CHECK(dot.find("digraph dfa {") == 0);
  CHECK(dot.find("0 [shape=doublecircle") != std::string::npos);
  CHECK(dot.find("__start -> 0;") != std::string::npos);
  CHECK(dot.find("{5,13}") != std::string::npos);
  std::istringstream in(dot);
  CHECK_THROWS_AS(parse(in, DfaFormat::kDot), std::invalid_argument);
}

TEST_CASE("labels must cover all states") {
  const Dfa dfa = build_canonical({2, 3});
  CHECK_THROWS_AS(serialize({dfa, {"only one"}}, DfaFormat::kText),
                  std::invalid_argument);
}

TEST_CASE("digit-string encodings") {
  CHECK(parse_digits("1101", 2) == DigitString{1, 1, 0, 1});
  CHECK(parse_digits("ff", 16) == DigitString{15, 15});
  CHECK(parse_digits("FF", 16) == DigitString{15, 15});
  CHECK(parse_digits("z", 36) == DigitString{35});
  CHECK(parse_digits("2,3", 6) == DigitString{2, 3});
  CHECK(parse_digits("39", 40) == DigitString{39});
  CHECK(parse_digits("10,0,39", 40) == DigitString{10, 0, 39});
  CHECK(parse_digits("", 2).empty());
  CHECK(parse_digits("", 100).empty());
  CHECK_THROWS_AS(parse_digits("2", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_digits("g", 16), std::invalid_argument);
  CHECK_THROWS_AS(parse_digits("1,,2", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_digits("1, 2", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_digits("40", 40), std::invalid_argument);
}

TEST_CASE("breakdown rendering matches the committed fixture") {
  CHECK(render_breakdown(breakdown({6, 16})) == fixture("breakdown_6_16.txt"));
  const std::string coprime = render_breakdown(breakdown({2, 3}));
  CHECK(coprime.find("A0=0 laminf=3 f=3") != std::string::npos);
  CHECK(coprime.find("bounds 3 4 6") != std::string::npos);
}

TEST_CASE("pattern rendering matches the committed fixtures") {
  CHECK(render_pattern(6, 1, 2, 10) == fixture("pattern_6_1_2_10.txt"));
  CHECK(render_pattern(20, 30, 5, 6) == fixture("pattern_20_30_5_6.txt"));
}

TEST_CASE("pattern overflow names the offending z") {
  CHECK_THROWS_WITH_AS(render_pattern(2, 1, 2, 64),
                       doctest::Contains("z=64"), CapacityError);
  CHECK_THROWS_AS(render_pattern(2, 0, 1, 0), std::invalid_argument);
}

}  // TEST_SUITE
