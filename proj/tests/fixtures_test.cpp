#include <doctest.h>

#include "moufang/axioms.hpp"
#include "moufang/error.hpp"
#include "moufang/fixtures.hpp"
#include "support/oracles.hpp"

using namespace moufang;

TEST_CASE("cyclic groups") {
  CHECK(fixtures::cyclic_group(1) == CayleyTable({{0}}));
  CHECK(fixtures::cyclic_group(2) == CayleyTable({{0, 1}, {1, 0}}));
  CHECK(classify(fixtures::cyclic_group(4)).rung == Rung::group);
  CHECK_THROWS_AS(fixtures::cyclic_group(0), Error);
}

TEST_CASE("symmetric group on three points") {
  CayleyTable const s3 = fixtures::symmetric_group_3();
  // Frozen from an independent enumeration of S3 in lexicographic order.
  CHECK(s3 == CayleyTable({{0, 1, 2, 3, 4, 5},
                           {1, 0, 4, 5, 2, 3},
                           {2, 3, 0, 1, 5, 4},
                           {3, 2, 5, 4, 0, 1},
                           {4, 5, 1, 0, 3, 2},
                           {5, 4, 3, 2, 1, 0}}));
  CHECK(check_associative(s3).passed);
  CheckReport const comm = check_commutative(s3);
  CHECK_FALSE(comm.passed);
  CHECK(comm.witness == std::vector<Element>{1, 2});
  CHECK(s3(1, 2) != s3(2, 1));
  CHECK(classify(s3).rung == Rung::group);
}

TEST_CASE("Chein doubling") {
  CayleyTable const d2 = fixtures::chein_double(fixtures::cyclic_group(2));
  CHECK(d2.order() == 4);
  CHECK(classify(d2).rung == Rung::group);
  CHECK(oracle::associative(d2.rows()));

  CayleyTable const d3 = fixtures::chein_double(fixtures::cyclic_group(3));
  CHECK(d3.order() == 6);
  CHECK(classify(d3).rung == Rung::group);

  CayleyTable const d6 = fixtures::chein_double(fixtures::symmetric_group_3());
  CHECK(d6.order() == 12);
  CHECK(classify(d6).rung == Rung::moufang_loop);
  CHECK_FALSE(oracle::associative(d6.rows()));
  CHECK(oracle::moufang_one_bracketing(d6.rows()));
  // G sits at indices 0..n-1 with its own multiplication.
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h) CHECK(d6(g, h) == fixtures::symmetric_group_3()(g, h));

  CHECK_THROWS_AS(fixtures::chein_double(fixtures::random_loop(5, 1)), Error);
}

TEST_CASE("random loops") {
  CHECK(fixtures::random_loop(1, 99) == CayleyTable({{0}}));
  CHECK(check_loop(fixtures::random_loop(5, 42)).passed);
  CHECK(find_unit(fixtures::random_loop(5, 42)) == Element{0});
  CHECK(fixtures::random_loop(7, 5) == fixtures::random_loop(7, 5));
  bool differs = false;
  for (std::uint32_t seed = 1; seed < 10 && !differs; ++seed)
    differs = fixtures::random_loop(6, seed) != fixtures::random_loop(6, 0);
  CHECK(differs);
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    CayleyTable const t = fixtures::random_loop(3 + seed % 7, seed);
    CHECK(oracle::latin(t.rows()));
    CHECK(oracle::unit(t.rows()) == std::size_t{0});
  }
}

TEST_CASE("loop enumeration matches the brute-force oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<CayleyTable> seen;
    std::size_t const count = fixtures::for_each_loop(n, [&](CayleyTable const& t) {
      seen.push_back(t);
      return true;
    });
    auto const expected = oracle::normalized_latin_squares(n);
    REQUIRE(count == expected.size());
    // Both enumerate in lexicographic order.
    for (std::size_t i = 0; i < count; ++i) CHECK(seen[i].rows() == expected[i]);
  }
  std::size_t visited = 0;
  fixtures::for_each_loop(5, [&](CayleyTable const&) { return ++visited < 3; });
  CHECK(visited == 3);
}
