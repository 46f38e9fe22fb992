#include <random>

#include "doctest.h"
#include "fibtl/braid.hpp"
#include "test_support.hpp"

using namespace fibtl;

TEST_CASE("parse_braid accepts spaces, commas and a leading plus") {
  CHECK(parse_braid("1 1 1", 2).letters() == std::vector<Letter>{1, 1, 1});
  CHECK(parse_braid("1,-2, +1", 3).letters() == std::vector<Letter>{1, -2, 1});
  CHECK(parse_braid("  ", 4).empty());
  CHECK(parse_braid("", 1).strands() == 1);
}

TEST_CASE("parse_braid rejects bad tokens") {
  try {
    parse_braid("1 2", 2);
    FAIL("expected BraidError");
  } catch (const BraidError& e) {
    CHECK(e.token() == "2");
    CHECK(std::string(e.what()).find("token '2'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_braid("0", 3), BraidError);
  CHECK_THROWS_AS(parse_braid("1 x", 3), BraidError);
  CHECK_THROWS_AS(parse_braid("1.5", 3), BraidError);
  CHECK_THROWS_AS(parse_braid("-3", 3), BraidError);
  CHECK_THROWS_AS(parse_braid("1", 1), BraidError);
  CHECK_THROWS_AS(BraidWord(0), BraidError);
}

TEST_CASE("writhe") {
  CHECK(writhe(parse_braid("1 1 1", 2)) == 3);
  CHECK(writhe(parse_braid("1 -2 1 -2", 3)) == 0);
  CHECK(writhe(parse_braid("-1 -1 -1", 2)) == -3);
  CHECK(writhe(BraidWord(5)) == 0);
}

TEST_CASE("inverse_word reverses and negates") {
  CHECK(inverse_word(parse_braid("1 -2 3", 4)).letters() == std::vector<Letter>{-3, 2, -1});
  CHECK(inverse_word(BraidWord(3)).empty());
}

TEST_CASE("closure_permutation") {
  CHECK(closure_permutation(parse_braid("1", 2)).image == std::vector<int>{1, 0});
  CHECK(closure_permutation(parse_braid("1 1", 2)).is_identity());
  CHECK(closure_permutation(parse_braid("1 1", 2)).cycle_count() == 2);  // Hopf link
  CHECK(closure_permutation(parse_braid("1 1 1", 2)).cycle_count() == 1);
  CHECK(closure_permutation(parse_braid("1 2", 3)).cycle_count() == 1);
  CHECK(closure_permutation(BraidWord(4)).cycle_count() == 4);
  CHECK(closure_permutation(parse_braid("1 -2 1 -2", 3)).cycle_count() == 1);
}

TEST_CASE("concatenation") {
  CHECK((parse_braid("1", 3) * parse_braid("-2", 3)).letters() == std::vector<Letter>{1, -2});
  CHECK_THROWS_AS(parse_braid("1", 3) * parse_braid("1", 2), BraidError);
}

TEST_CASE("JSON round trip") {
  const BraidWord b = parse_braid("1 -2 1", 3);
  CHECK(to_json(b).dump() == R"({"strands":3,"word":[1,-2,1]})");
  CHECK(braid_from_json(to_json(b)) == b);
  CHECK_THROWS_AS(braid_from_json(nlohmann::json::parse(R"({"strands":2,"word":[3]})")), BraidError);
}

TEST_CASE("random braids: inverse properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord b = testing::random_braid(rng, 6, 12);
    const BraidWord inv = inverse_word(b);
    CHECK(writhe(inv) == -writhe(b));
    CHECK(inverse_word(inv) == b);
    CHECK(closure_permutation(b * inv).is_identity());
    CHECK(closure_permutation(b).cycle_count() == closure_permutation(inv).cycle_count());
  }
}
