#include <doctest.h>

#include <set>

#include "shiftred/relations.hpp"

using namespace shiftred;

namespace {

EvPeriodicSeq seq(std::vector<Symbol> pre, std::vector<Symbol> period) { return {pre, period}; }

bool equal_bool(const EvPeriodicSeq& x, const EvPeriodicSeq& y) { return e0_equiv(x, y); }

}  // namespace

TEST_CASE("eventually periodic sequences")
{
  const EvPeriodicSeq s = seq({1, 1}, {0, 1, 2});
  CHECK(s.at(0) == 1);
  CHECK(s.at(2) == 0);
  CHECK(s.at(6) == 1);
  CHECK(s.at(1000001) == s.at(2 + 999999 % 3));
}

TEST_CASE("E_0")
{
  CHECK(e0_equiv(seq({1, 0}, {0, 1}), seq({1, 0}, {0, 1})));
  CHECK_FALSE(e0_equiv(seq({}, {0}), seq({}, {1})));
  CHECK_FALSE(e0_equiv(seq({1, 1, 1}, {0, 1}), seq({}, {0, 1})));
  CHECK(e0_equiv(seq({1, 1}, {0, 1}), seq({}, {0, 1})));
  CHECK(e0_equiv(seq({}, {0, 1}), seq({0}, {1, 0, 1, 0})));
  CHECK(e0_equiv(seq({}, {0, 0, 1}), seq({}, {0, 0, 1, 0, 0, 1})));
  CHECK_FALSE(e0_equiv(seq({}, {0, 0, 1}), seq({}, {0, 1})));
  CHECK_THROWS(e0_equiv(seq({1}, {}), seq({}, {1})));
}

TEST_CASE("products")
{
  const auto a = std::pair(seq({}, {0}), seq({1}, {0, 1}));
  const auto b = std::pair(seq({1, 1}, {0}), seq({}, {1, 0}));
  const auto c = std::pair(seq({}, {1}), seq({}, {1, 0}));
  CHECK(product_equiv(equal_bool, equal_bool, a, b) == Truth::yes);
  CHECK(product_equiv(equal_bool, equal_bool, a, c) == Truth::no);

  const auto orbit = [](const Labeling& x, const Labeling& y) { return equal_points(x, y, 4); };
  const Labeling p = Labeling::constant(2, 2, 0);
  const Labeling q = Labeling::fin_support(2, 2, 0, {{Word::parse(2, "a"), 1}});
  const Labeling opaque =
    Labeling::from_function(2, 2, "opaque", [](const Word& g) { return Symbol(g.length() % 2); });
  CHECK(product_equiv(orbit, equal_bool, std::pair(p, a.first), std::pair(p, b.first)) ==
        Truth::yes);
  CHECK(product_equiv(orbit, equal_bool, std::pair(p, a.first), std::pair(q, b.first)) ==
        Truth::no);
  CHECK(product_equiv(orbit, equal_bool, std::pair(p, a.first), std::pair(opaque, b.first)) ==
        Truth::no);  // distinct at the identity
  CHECK(product_equiv(orbit, equal_bool, std::pair(opaque, a.first),
                      std::pair(shift(Word::parse(2, "aa"), opaque), b.first)) == Truth::unknown);
  CHECK(product_equiv(orbit, equal_bool, std::pair(opaque, a.first),
                      std::pair(shift(Word::parse(2, "aa"), opaque), c.first)) == Truth::no);
}

TEST_CASE("orbit samples")
{
  const std::vector<Word> gens = {Word::parse(2, "a"), Word::parse(2, "b")};
  const Labeling spike = Labeling::fin_support(2, 2, 0, {{Word(2), 1}});

  const auto single = orbit_sample(gens, spike, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].g.is_identity());
  CHECK(single[0].representative == 0);

  const auto flat = orbit_sample(gens, Labeling::constant(2, 2, 1), 2);
  CHECK(flat.size() == 17);
  for (const OrbitEntry& e : flat)
    CHECK(e.representative == 0);

  const auto moved = orbit_sample(gens, spike, 1);
  REQUIRE(moved.size() == 5);
  std::set<std::size_t> reps;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    CHECK(moved[i].representative == i);
    CHECK_FALSE(moved[i].unresolved);
    reps.insert(moved[i].representative);
  }
  CHECK(reps.size() == 5);

  // a periodic point: a acts as an element of order 2 on Z_2
  const Labeling q = Labeling::quotient(
    2, 2, std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)), {1, 0}, {0, 1});
  const auto cyc = orbit_sample(gens, q, 2);
  for (const OrbitEntry& e : cyc)
    CHECK(cyc[e.representative].point.eval(Word(2)) == e.point.eval(Word(2)));
  std::set<std::size_t> classes;
  for (const OrbitEntry& e : cyc)
    classes.insert(e.representative);
  CHECK(classes.size() == 2);
}
