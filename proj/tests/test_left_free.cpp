#include <doctest.h>

#include "shiftred/reductions.hpp"

using namespace shiftred;

namespace {

Word w2(const char* s) { return Word::parse(2, s); }
Word w3(const char* s) { return Word::parse(3, s); }

}  // namespace

TEST_CASE("perfect squares")
{
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK_FALSE(is_perfect_square(2));
  CHECK(is_perfect_square(144));
  CHECK_FALSE(is_perfect_square(143));
  CHECK(is_perfect_square(4294967296ull));
  CHECK_FALSE(is_perfect_square(4294967297ull));
  for (Index r = 0; r < 3000; ++r) {
    CHECK(is_perfect_square(r * r));
    if (r > 1)
      CHECK_FALSE(is_perfect_square(r * r - 1));
  }
}

TEST_CASE("z0 depends on the length only")
{
  const Labeling z = z0();
  CHECK(z.rank() == 2);
  CHECK(z.alphabet() == 4);
  CHECK(z.eval(Word(2)) == 3);
  CHECK(z.eval(w2("a")) == 3);
  CHECK(z.eval(w2("aa")) == 2);
  CHECK(z.eval(w2("bAbA")) == 3);
  CHECK(z.eval(w2("bAbAb")) == 2);
}

TEST_CASE("z0 witnesses")
{
  CHECK(z0_witness_bound(Word(2), w2("aa")) == 4);
  CHECK(z0_witness(Word(2), w2("aa")) == w2("aaaa"));
  // u starts with A, so the block uses b
  CHECK(z0_witness(Word(2), w2("A")) == w2("b"));

  const Labeling z = z0();
  for (const Word& g : cached_words_up_to(2, 2))
    for (const Word& gp : cached_words_up_to(2, 4)) {
      if (g == gp)
        continue;
      const Word h = z0_witness(g, gp);
      CHECK(z.eval(h * g) != z.eval(h * gp));
      CHECK(h.length() <= z0_witness_bound(g, gp));
    }
  CHECK_THROWS_AS(z0_witness(w2("a"), w2("a")), std::invalid_argument);
  CHECK_THROWS_AS(z0_witness(w3("c"), w3("a")), std::invalid_argument);
}

TEST_CASE("the 4-letter embedding")
{
  const Labeling x = Labeling::fin_support(2, 2, 0, {{w2("ba"), 1}});
  const Labeling y = lf_embed(x);
  CHECK(y.rank() == 3);
  CHECK(y.alphabet() == 4);
  CHECK(y.eval(w3("ba")) == 1);
  CHECK(y.eval(w3("ab")) == 0);
  CHECK(y.eval(w3("c")) == 3);     // suffix after the last c is empty
  CHECK(y.eval(w3("aCbb")) == 2);  // suffix bb
  CHECK(y.eval(w3("bcCa")) == 1);  // reduces to ba
  CHECK(y.eval(w3("cAbab")) == 3);
  CHECK_THROWS_AS(lf_embed(Labeling::constant(3, 2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(lf_embed(Labeling::constant(2, 3, 0)), std::invalid_argument);
}

TEST_CASE("constructive witnesses for the image")
{
  const Labeling y = lf_embed(Labeling::fin_support(2, 2, 1, {{w2("a"), 0}}));
  for (const Word& g : cached_words_up_to(3, 2))
    for (const Word& gp : cached_words_up_to(3, 2)) {
      if (g == gp)
        continue;
      CAPTURE(g.str());
      CAPTURE(gp.str());
      const Word h = lf_witness(g, gp);
      CHECK(y.eval(h * g) != y.eval(h * gp));
      CHECK(h.length() <= lf_witness_bound(g, gp));
    }
  // g^-1 g' outside F_2: h = g^-1
  CHECK(lf_witness(w3("a"), w3("ac")) == w3("A"));
  // inside F_2: c p g^-1
  CHECK(lf_witness(Word(3), w3("aa")) == w3("caaaa"));
  CHECK(lf_witness_bound(Word(3), w3("aa")) == 5);
}

TEST_CASE("search finds a witness for z0 and its image")
{
  const auto h = left_free_witness(z0(), Word(2), w2("aa"), 2);
  REQUIRE(h);
  CHECK(z0().eval(*h) != z0().eval(*h * w2("aa")));
  CHECK(h->is_identity());
  // any separating word is a valid answer; this one needs length 1
  CHECK(z0().eval(w2("a")) != z0().eval(w2("aaa")));

  const Labeling y = lf_embed(Labeling::constant(2, 2, 0));
  const auto k = left_free_witness(y, w3("a"), w3("b"), 5);
  REQUIRE(k);
  CHECK(y.eval(*k * w3("a")) != y.eval(*k * w3("b")));

  // a constant point has no witness at all
  CHECK_FALSE(left_free_witness(Labeling::constant(2, 2, 0), Word(2), w2("a"), 3));
}
