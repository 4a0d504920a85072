#include <doctest.h>

#include "shiftred/point_file.hpp"

using namespace shiftred;

namespace {

std::string error_of(const std::string& text)
{
  try {
    parse_point_text(text, "t.pt");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fin-support files")
{
  const Labeling x = parse_point_text("# comment\n"
                                      "labeling fin-support k=2 alphabet=2 default=1\n"
                                      "\n"
                                      "set ab 0   # trailing comment\n"
                                      "set 1 0\n");
  CHECK(x.rank() == 2);
  CHECK(x.alphabet() == 2);
  CHECK(x.eval(Word::parse(2, "ab")) == 0);
  CHECK(x.eval(Word(2)) == 0);
  CHECK(x.eval(Word::parse(2, "b")) == 1);

  const Labeling y = parse_point_text("labeling fin-support k=3 alphabet=9\n");
  CHECK(y.eval(Word::parse(3, "cab")) == 0);
}

TEST_CASE("quotient files")
{
  const Labeling c = parse_point_text("labeling quotient k=2 alphabet=9\n"
                                      "group cyclic 4\n"
                                      "hom a=1 b=2\n"
                                      "label 0 5\nlabel 1 6\nlabel 2 7\nlabel 3 8\n");
  CHECK(c.eval(Word::parse(2, "ab")) == 8);

  const Labeling t = parse_point_text("labeling quotient k=3 alphabet=2\n"
                                      "group table 2\n"
                                      "0 1\n"
                                      "1 0\n"
                                      "hom a=1 b=0 c=1\n"
                                      "label 0 0\nlabel 1 1\n");
  CHECK(t.eval(Word::parse(3, "ab")) == 1);
  CHECK(t.eval(Word::parse(3, "ac")) == 0);
}

TEST_CASE("diagnostics name the line")
{
  CHECK(error_of("") == "t.pt:1: empty point file");
  CHECK(error_of("labeling blob k=2 alphabet=2\n").starts_with("t.pt:1:"));
  CHECK(error_of("labeling fin-support k=4 alphabet=2\n").starts_with("t.pt:1:"));
  CHECK(error_of("labeling fin-support k=2 alphabet=2\nset ab 2\n").starts_with("t.pt:2:"));
  CHECK(error_of("labeling fin-support k=2 alphabet=2\nset ac 1\n").starts_with("t.pt:2:"));
  CHECK(error_of("labeling fin-support k=2 alphabet=2\n\nset a 1\nset a 0\n")
          .starts_with("t.pt:4:"));
  CHECK(error_of("labeling fin-support k=2 alphabet=2\nfrobnicate\n").starts_with("t.pt:2:"));
  CHECK(error_of("labeling quotient k=2 alphabet=2\ngroup cyclic 2\nhom a=1 b=0\nlabel 0 1\n")
          .find("missing label") != std::string::npos);
  CHECK(error_of("labeling quotient k=2 alphabet=2\ngroup table 2\n0 1\n1 1\n")
          .starts_with("t.pt:"));
  CHECK(error_of("labeling quotient k=2 alphabet=2\ngroup cyclic 2\nhom a=2 b=0\n")
          .starts_with("t.pt:3:"));
  CHECK(error_of("labeling quotient k=2 alphabet=2 default=0\n").starts_with("t.pt:1:"));
  CHECK_THROWS_AS(load_point("/nonexistent/x.pt"), ParseError);
}

TEST_CASE("format and parse round-trip")
{
  const Labeling x =
    Labeling::fin_support(3, 9, 4, {{Word::parse(3, "cA"), 8}, {Word(3), 0}});
  const Labeling back = parse_point_text(format_point(x));
  CHECK(equal_points(x, back, 0).is_equal());

  const Labeling q = Labeling::quotient(
    2, 2, std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3()), {1, 3},
    {1, 0, 0, 1, 0, 1});
  const Labeling qb = parse_point_text(format_point(q));
  CHECK(equal_points(q, qb, 0).is_equal());

  CHECK_THROWS_AS(format_point(Labeling::from_function(2, 2, "f", [](const Word&) { return 0u; })),
                  std::invalid_argument);
}

TEST_CASE("the shipped sample points load")
{
  for (const char* name :
       {"constant0.pt", "spike.pt", "sparse.pt", "cyclic3.pt", "s3.pt", "counterexample.pt"})
    CHECK_NOTHROW(load_point(std::string(SHIFTRED_DATA_DIR) + "/points/" + name));
}
