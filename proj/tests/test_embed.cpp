#include <doctest.h>

#include "shiftred/reductions.hpp"

using namespace shiftred;

namespace {

Word w2(const char* s) { return Word::parse(2, s); }
Word w3(const char* s) { return Word::parse(3, s); }

Labeling sample() { return Labeling::fin_support(2, 2, 0, {{w2("ab"), 1}, {w2("B"), 1}}); }

}  // namespace

TEST_CASE("standard schedule")
{
  const Schedule s = Schedule::standard();
  CHECK(s.n(0, 0) == 1);
  CHECK(s.n(3, 4) == 5);
  CHECK(s.m(0, 0) == 1);
  CHECK(s.m(1, 0) == 3);
  CHECK(s.m(1, 1) == 5);
  CHECK(s.w(0, 0) == w2("aa"));
  CHECK(s.w(0, 1) == w2("AB"));
  CHECK(s.lookup(3) == std::pair<Index, Index>(1, 0));
  CHECK(s.lookup(5) == std::pair<Index, Index>(1, 1));
  CHECK_FALSE(s.lookup(0));
}

TEST_CASE("embedding values")
{
  const Labeling x = sample();
  const Labeling y = embed_2to9(x);
  CHECK(y.rank() == 3);
  CHECK(y.alphabet() == 9);
  CHECK(y.eval(w3("ab")) == 1);
  CHECK(y.eval(w3("ba")) == 0);
  CHECK(y.eval(w3("C")) == 2);
  CHECK(y.eval(w3("bCab")) == 2);

  // g = h c^p g' with p = m(i,j): f_{w(i,j)}(x)(h) + 3, whatever g' is
  const Schedule s = Schedule::standard();
  CHECK(y.eval(w3("c")) == fw(s.w(0, 0), x).eval(Word(2)) + 3);
  CHECK(y.eval(w3("acb")) == fw(s.w(0, 0), x).eval(w2("a")) + 3);
  CHECK(y.eval(w3("Bcccab")) == fw(s.w(1, 0), x).eval(w2("B")) + 3);
  CHECK(y.eval(w3("Bccc")) == y.eval(w3("BcccAcA")));

  CHECK(embed_2to9(Labeling::constant(2, 2, 0)).eval(w3("c")) == 3);
  CHECK_THROWS_AS(embed_2to9(Labeling::constant(3, 2, 0)), std::invalid_argument);
}

TEST_CASE("embedding commutes with the F_2 action")
{
  const Labeling x = sample();
  const Labeling image = embed_2to9(x);
  for (const Word& g : cached_words_up_to(2, 2)) {
    const Labeling lhs = embed_2to9(shift(g, x));
    const Labeling rhs = shift(g.with_rank(3), image);
    for (const Word& h : cached_words_up_to(3, 2))
      CHECK(lhs.eval(h) == rhs.eval(h));
    CHECK(equal_points(lhs, rhs, 0).is_equal());
  }
}

TEST_CASE("structural comparison of images")
{
  const Labeling x = sample();
  const Labeling other = Labeling::fin_support(2, 2, 0, {{w2("ab"), 1}});
  const Verdict v = equal_points(embed_2to9(x), embed_2to9(other), 0);
  REQUIRE(v.is_distinct());
  CHECK(embed_2to9(x).eval(v.witness()) != embed_2to9(other).eval(v.witness()));

  // agreement on a ball, checked against pointwise evaluation
  const Labeling a = shift(w3("a"), embed_2to9(x));
  const Labeling b = shift(w3("A"), embed_2to9(x));
  for (unsigned r = 0; r <= 3; ++r) {
    const Verdict structural = equal_on_ball(a, b, r);
    const Verdict literal = compare_literal(a, b, r);
    CHECK(structural.kind() == literal.kind());
    if (structural.is_distinct())
      CHECK(a.eval(structural.witness()) != b.eval(structural.witness()));
  }
}

TEST_CASE("check_A")
{
  CHECK(check_A(Labeling::constant(3, 9, 0), 5, 5).status == CheckAResult::Status::pass);

  const Labeling y = Labeling::fin_support(3, 9, 0, {{w3("Abb"), 1}});
  const CheckAResult r = check_A(y, 0, 0);
  CHECK(r.status == CheckAResult::Status::counterexample);
  CHECK(r.i == 0);
  CHECK(r.j == 0);
  REQUIRE(r.witness);
  CHECK(*r.witness == w3("bb"));
  CHECK(to_string(r) == "Counterexample(0,0) at bb");

  const CheckAResult images = check_A(embed_2to9(sample()), 4, 4, Schedule::standard(), 12);
  CHECK(images.status == CheckAResult::Status::pass);
  CHECK(images.checked == 12);  // m(i,j) = <i,j> + 1 <= 12

  // nothing decides global equality of an opaque function
  const Labeling opaque =
    Labeling::from_function(3, 9, "length parity", [](const Word& g) { return Symbol(g.length() % 2); });
  CHECK(check_A(opaque, 0, 0).status == CheckAResult::Status::inconclusive);
}
