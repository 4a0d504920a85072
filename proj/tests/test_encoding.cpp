#include <doctest.h>

#include "shiftred/encoding.hpp"
#include "shiftred/oracles.hpp"

using namespace shiftred;

TEST_CASE("Cantor pairing")
{
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 0) == 2);
  CHECK(pair(0, 1) == 1);
  CHECK(unpair(9) == std::pair<Index, Index>(3, 0));
  for (Index n = 0; n < 40; ++n)
    for (Index m = 0; m < 40; ++m) {
      CHECK(pair(n, m) == oracle::pair_by_walk(n, m));
      CHECK(unpair(pair(n, m)) == std::pair(n, m));
    }
  CHECK_THROWS_AS(pair(Index{1} << 40, Index{1} << 40), std::overflow_error);
}

TEST_CASE("unpair near the top of the range")
{
  const Index n = 3'000'000'000ull, m = 1'234'567ull;
  CHECK(unpair(pair(n, m)) == std::pair(n, m));
  const Index k = pair(0, 6'000'000'000ull);
  CHECK(unpair(k) == std::pair<Index, Index>(0, 6'000'000'000ull));
  CHECK(unpair(k + 1) == std::pair<Index, Index>(1, 5'999'999'999ull));
  CHECK(unpair(k - 1) == std::pair<Index, Index>(5'999'999'999ull, 0));
}

TEST_CASE("arbitrary-precision pairing agrees with the fixed-width one")
{
  for (Index n : {0ull, 1ull, 17ull, 123456ull})
    for (Index m : {0ull, 3ull, 99ull}) {
      CHECK(pair(Natural(n), Natural(m)) == Natural(pair(n, m)));
      const auto [a, b] = unpair(Natural(pair(n, m)));
      CHECK(a == Natural(n));
      CHECK(b == Natural(m));
    }
  const Natural big = Natural(1) << 200;
  const auto [a, b] = unpair(pair(big, big + 5));
  CHECK(a == big);
  CHECK(b == big + 5);
}

TEST_CASE("right regular representation")
{
  for (Index n = 0; n < 50; ++n)
    CHECK(right_regular(0, n) == n);
  CHECK(right_regular(1, 0) == 1);  // g_0 g_1 = a
  CHECK(right_regular(1, 2) == 0);  // A a = 1
  CHECK(right_regular(3, 1) == 6);  // a b = g_6
}

TEST_CASE("pi_a moves the first coordinate only")
{
  for (Index k = 0; k < 100; ++k)
    CHECK(pi_apply(0, k) == k);
  CHECK(pi_apply(1, 15) == 22);  // <0,5> -> <1,5>
  CHECK(pi_apply(1, 0) == 2);
  CHECK(pi_compose_index(1, 3) == 6);
  CHECK(pi_compose_index(1, 2) == 0);
  CHECK(pi_compose_index(0, 7) == 7);
  CHECK(pi_compose_index(7, 0) == 7);
  CHECK(pi_apply(3, pi_apply(1, 0)) == 27);
  CHECK(pi_apply(6, 0) == 27);
}

TEST_CASE("pattern codes")
{
  CHECK(pattern_code(0, std::vector<Symbol>{0}) == 0);
  CHECK(pattern_code(3, std::vector<Symbol>(ball_size(3, 3), 0)) == 9);

  // digits are little-endian base 9 in ball order
  const std::vector<Symbol> digits{1, 0, 2, 0, 0, 0, 8};
  const Natural code = pattern_code(1, digits);
  const Natural value = Natural(1) + 2 * 81 + Natural(8) * 531441;
  CHECK(code == pair(Natural(1), value));
  const PatternCode back = pattern_decode(code);
  CHECK(back.radius == 1);
  CHECK(back.digits == digits);
  CHECK(pattern_radius(code) == 1);

  CHECK_THROWS_AS(pattern_code(1, std::vector<Symbol>{9, 0, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pattern_code(1, std::vector<Symbol>{0, 0, 0}), std::invalid_argument);
  // radius 0 with value 9 would need a second digit
  CHECK_THROWS_AS(pattern_decode(pair(Natural(0), Natural(9))), std::invalid_argument);
}

TEST_CASE("code6 packs a bit and a case")
{
  CHECK(code6(0, 0) == 0);
  CHECK(code6(1, 0) == 3);
  CHECK(code6(1, 2) == 5);
  for (unsigned b = 0; b < 2; ++b)
    for (unsigned t = 0; t < 3; ++t)
      CHECK(decode6(code6(b, t)) == std::pair(b, t));
  CHECK_THROWS_AS(code6(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(code6(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(decode6(6), std::invalid_argument);
}
