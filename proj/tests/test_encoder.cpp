#include <doctest.h>

#include "shiftred/oracles.hpp"
#include "shiftred/reductions.hpp"

using namespace shiftred;

namespace {

Word w2(const char* s) { return Word::parse(2, s); }

Labeling sample() { return Labeling::fin_support(2, 2, 1, {{w2("ab"), 0}, {w2("1"), 0}}); }

// Code of (g_n . y) on B_3(1, m) from scratch: base-9 digits in shortlex order, then Cantor.
Natural direct_code(const Labeling& y, Index n, unsigned m)
{
  const Word g = word_of_index(2, n).with_rank(3);
  Natural value = 0, place = 1;
  for (const auto& s : oracle::reduced_strings(3, m)) {
    value += place * y.eval(g.inverse() * Word::reduce(3, s));
    place *= 9;
  }
  const Natural sum = value + m;
  return sum * (sum + 1) / 2 + m;
}

}  // namespace

TEST_CASE("y* of the constant point")
{
  const std::vector<Natural> codes = fstar(Labeling::constant(3, 9, 0), 10);
  CHECK(codes[0] == 0);
  CHECK(codes[1] == 2);
  CHECK(codes[9] == 0);  // unpair(9) = (3,0)
  for (Index k = 0; k < 10; ++k) {
    const Index m = unpair(k).second;
    CHECK(codes[k] == pair(m, 0));
  }
}

TEST_CASE("coordinates match a direct computation")
{
  const Labeling y = embed_2to9(sample());
  for (Index k = 0; k < 15; ++k) {
    const auto [n, m] = unpair(k);
    CHECK(materialize(fstar_coordinate(y, k)) == direct_code(y, n, static_cast<unsigned>(m)));
  }
}

TEST_CASE("expansion limit")
{
  const Coordinate c = fstar_coordinate(Labeling::constant(3, 9, 0), pair(0, 7));
  CHECK(c.m == 7);
  CHECK_THROWS_AS(materialize(c), std::length_error);
  CHECK_THROWS_AS(fstar_coordinate(sample(), 0), std::invalid_argument);
}

TEST_CASE("forward equivariance")
{
  CHECK(verify_forward(sample(), 0, 50).status == ForwardResult::Status::pass);
  for (Index a : {1u, 6u, 20u}) {
    const ForwardResult r = verify_forward(sample(), a, 500);
    CHECK(to_string(r) == "Pass");
  }

  const Labeling q = Labeling::quotient(
    2, 2, std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3()), {1, 3},
    {1, 0, 0, 1, 0, 1});
  CHECK(verify_forward(q, 13, 500).status == ForwardResult::Status::pass);
}

TEST_CASE("a radius off by one is caught")
{
  const Encoder broken = [](const Labeling& x, Index k) {
    Coordinate c = fstar_coordinate(embed_2to9(x), k);
    ++c.m;
    return c;
  };
  const ForwardResult r = verify_forward(sample(), 3, 500, broken);
  CHECK(r.status == ForwardResult::Status::fail);
  CHECK(r.k == 0);
}

TEST_CASE("shifting by g_n^-1 instead of g_n is caught")
{
  const Encoder broken = [](const Labeling& x, Index k) {
    const auto [n, m] = unpair(k);
    return Coordinate{n, m, shift(word_of_index(2, n).inverse().with_rank(3), embed_2to9(x))};
  };
  const ForwardResult r = verify_forward(sample(), 3, 500, broken);
  REQUIRE(r.status == ForwardResult::Status::fail);
  REQUIRE(r.witness);
}

TEST_CASE("refutation probes")
{
  const Labeling x = sample();
  const RefuteResult same = refute_equivalence(x, x, 4, 100);
  CHECK(same.possibly_equivalent == std::vector<Index>{0});

  const RefuteResult moved = refute_equivalence(x, shift(word_of_index(2, 7), x), 10, 100);
  CHECK(moved.possibly_equivalent == std::vector<Index>{7});
  CHECK(to_string(moved) == "PossiblyEquivalent(7)");

  const Labeling flipped = Labeling::fin_support(2, 2, 1, {{w2("ab"), 0}});
  const RefuteResult r = refute_equivalence(x, flipped, 20, 200);
  CHECK(r.refuted());
  CHECK(to_string(r) == "RefutedUpTo(20)");
}

TEST_CASE("coordinates with different radii differ")
{
  const Labeling y = Labeling::constant(3, 9, 0);
  CHECK(compare_coordinates(fstar_coordinate(y, 1), fstar_coordinate(y, 0)).differ());
  CHECK(compare_coordinates(fstar_coordinate(y, 4), fstar_coordinate(y, 1)).equal());
}
