#include <doctest.h>

#include "shiftred/oracles.hpp"
#include "shiftred/reductions.hpp"

using namespace shiftred;

namespace {

Word w2(const char* s) { return Word::parse(2, s); }

Labeling fs(Symbol background, std::initializer_list<std::pair<const char*, Symbol>> values)
{
  std::map<Word, Symbol> m;
  for (const auto& [w, s] : values)
    m[w2(w)] = s;
  return Labeling::fin_support(2, 2, background, std::move(m));
}

Labeling cyclic3()
{
  return Labeling::quotient(2, 2, std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3)),
                            {1, 2}, {1, 0, 0});
}

}  // namespace

TEST_CASE("a single 1 at the identity, w = a")
{
  // p_j(1) = [j = 0]; the zero pattern is least, so Z = Z \ {0} and its complement {0} has
  // largest element 0
  const Labeling x = fs(0, {{"1", 1}});
  const SublemmaCase c = sublemma_case(w2("a"), x);
  CHECK(c.branch == SublemmaBranch::complement_largest);
  CHECK(c.radius == 0);
  CHECK(c.anchor == 0);
  CHECK(c.t == 0);
  CHECK(fw(w2("a"), x).eval(Word(2)) == 3);
}

TEST_CASE("finite Z takes its largest element")
{
  // along w = a from the identity: x(a^j h). With 1 at a^-1 and a, and background 0, the
  // zero pattern is least and occurs off {-1, 1}
  const SublemmaCase c = sublemma_case(w2("a"), fs(0, {{"A", 1}, {"a", 1}}));
  CHECK(c.branch == SublemmaBranch::complement_largest);
  CHECK(c.anchor == 1);
  CHECK(c.t == 1);

  // background 1 with zeros: the patterns that contain a 0 are below the all-ones one
  const SublemmaCase d = sublemma_case(w2("a"), fs(1, {{"aa", 0}, {"A", 0}}));
  CHECK(d.branch == SublemmaBranch::z_largest);
  CHECK(d.radius == 0);
  CHECK(d.anchor == 2);
  CHECK(d.t == 0);
}

TEST_CASE("periodic points use the Z' rule")
{
  // omega = 1 in Z_3; p_j = label(j mod 3) = [1], [0], [0]; Z = {1,2} + 3Z, Z' = 2 + 3Z
  const SublemmaCase c = sublemma_case(w2("a"), cyclic3());
  CHECK(c.branch == SublemmaBranch::alternating);
  CHECK(c.radius == 0);
  CHECK(c.anchor == 2);
  CHECK(c.t == 2);
  CHECK(fw(w2("a"), cyclic3()).eval(Word(2)) == 5);

  // viewed from a: p_j = label(j+1 mod 3), so Z = {0,1} + 3Z and 1 is in Z'
  const SublemmaCase d = sublemma_case(w2("a"), root_view(cyclic3(), w2("a")));
  CHECK(d.anchor == 1);
  CHECK(d.t == 1);

  // viewed from A: Z = {2,0} + 3Z and 0 is in Z'
  const SublemmaCase e = sublemma_case(w2("a"), root_view(cyclic3(), w2("A")));
  CHECK(e.anchor == 0);
  CHECK(e.t == 0);
}

TEST_CASE("invariant views")
{
  CHECK(sublemma_case(w2("ab"), Labeling::constant(2, 2, 1)).branch == SublemmaBranch::invariant);
  // aaa maps to the identity of Z_3
  const SublemmaCase c = sublemma_case(w2("aaa"), cyclic3());
  CHECK(c.branch == SublemmaBranch::invariant);
  CHECK(c.t == 0);
  CHECK(fw(w2("aaa"), cyclic3()).eval(w2("b")) == code6(0, 0));
}

TEST_CASE("the case analysis agrees with a brute-force scan on fin-support points")
{
  const Labeling points[] = {
    fs(0, {{"1", 1}}),
    fs(1, {{"ab", 0}, {"B", 0}}),
    fs(0, {{"aab", 1}, {"bA", 1}, {"BB", 1}}),
    fs(1, {{"a", 0}, {"aa", 0}, {"AbA", 0}, {"1", 0}}),
    fs(0, {{"ba", 1}, {"AB", 1}}),
    fs(0, {{"bab", 1}}),
  };
  const Word words[] = {w2("aa"), w2("Ab"), w2("a"), w2("ba")};
  for (const Labeling& x : points)
    for (const Word& w : words)
      for (const Word& g : cached_words_up_to(2, 2)) {
        CAPTURE(x.describe());
        CAPTURE(w.str());
        CAPTURE(g.str());
        const SublemmaCase c = sublemma_case(w, root_view(x, g));
        const oracle::ScanResult o = oracle::sublemma_scan(w, x, g, 30, 10, 7);
        REQUIRE_FALSE(o.invariant);
        CHECK(to_string(c.branch) == to_string(o.branch));
        CHECK(c.radius == o.radius);
        CHECK(c.anchor == o.anchor);
        CHECK(c.t == o.t);
      }
}

TEST_CASE("f_w separates g from gw exactly when the views differ")
{
  const Labeling x = fs(0, {{"aab", 1}, {"bA", 1}});
  for (const Word& w : {w2("aa"), w2("ba")}) {
    const Labeling image = fw(w, x);
    for (const Word& g : cached_words_up_to(2, 3)) {
      const bool same_view = equal_points(root_view(x, g), root_view(x, g * w), 0).is_equal();
      CHECK((image.eval(g) == image.eval(g * w)) == same_view);
    }
  }
}

TEST_CASE("f_w commutes with the shift")
{
  const Labeling x = fs(1, {{"Ab", 0}, {"b", 0}, {"1", 0}});
  const Labeling image = fw(w2("Ab"), x);
  for (const Word& gp : cached_words_up_to(2, 2)) {
    const Labeling lhs = fw(w2("Ab"), shift(gp, x));
    CHECK(equal_on_ball(lhs, shift(gp, image), 3).is_equal());
    CHECK(equal_points(lhs, shift(gp, image), 0).is_equal());
  }
}

TEST_CASE("f_w rejects bad input")
{
  CHECK_THROWS_AS(fw(Word(2), cyclic3()), std::invalid_argument);
  CHECK_THROWS_AS(fw(Word::parse(3, "c"), cyclic3()), std::invalid_argument);
  CHECK_THROWS_AS(fw(w2("a"), Labeling::constant(3, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(fw(w2("a"), Labeling::constant(2, 3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(fw(w2("a"), z0()), std::invalid_argument);
}
