#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shiftred/cli.hpp"

using namespace shiftred;

namespace {

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SHIFTRED_DATA_DIR) + "/points/" + name; }

}  // namespace

TEST_CASE("enumeration and balls")
{
  CHECK(run({"enum", "--k", "2", "--count", "3"}).out == "1 a A\n");
  CHECK(run({"enum", "--k", "3", "--count", "8"}).out == "1 a A b B c C aa\n");
  CHECK(run({"ball", "--k", "2", "--radius", "1"}).out == "1 a A b B\n");
  CHECK(run({"ball", "--k", "2", "--center", "a", "--radius", "1"}).out == "a aa 1 ab aB\n");
}

TEST_CASE("pi")
{
  CHECK(run({"pi", "--a", "1", "--k", "4"}).out == "26\n");
  CHECK(run({"pi", "--a", "0", "--k", "17"}).out == "17\n");
}

TEST_CASE("point evaluations")
{
  CHECK(run({"fw", "--w", "a", "--point", data("spike.pt"), "--at", "1"}).out == "3\n");
  const Run explained =
    run({"fw", "--w", "a", "--point", data("cyclic3.pt"), "--at", "1", "--explain"});
  CHECK(explained.code == 0);
  CHECK(explained.out == "5\nbit 1 t 2 branch alternating n 0 anchor 2\n");
  CHECK(run({"embed", "--point", data("sparse.pt"), "--at", "bA"}).out == "1\n");
  CHECK(run({"embed", "--point", data("sparse.pt"), "--at", "C"}).out == "2\n");
  CHECK(run({"lfembed", "--point", data("sparse.pt"), "--at", "aCbb"}).out == "2\n");
}

TEST_CASE("encoding and membership")
{
  CHECK(run({"encode", "--point", data("constant0.pt"), "--coords", "2"}).out == "0 2\n");
  CHECK(run({"check-a", "--point", data("constant0.pt"), "--imax", "2", "--jmax", "2"}).code == 0);
  const Run bad = run({"check-a", "--point", data("counterexample.pt"), "--imax", "0", "--jmax", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "Counterexample(0,0) at bb\n");
  const Run image = run({"check-a", "--point", data("sparse.pt"), "--imax", "2", "--jmax", "2"});
  CHECK(image.code == 0);
  CHECK(image.out.rfind("Pass", 0) == 0);
}

TEST_CASE("left-free search")
{
  const Run z = run({"leftfree", "--point", "@z0", "--g", "1", "--gp", "aa", "--radius", "2"});
  CHECK(z.code == 0);
  CHECK(z.out == "1\n");
  const Run none =
    run({"leftfree", "--point", data("constant0.pt"), "--g", "1", "--gp", "a", "--radius", "2"});
  CHECK(none.code == 1);
  CHECK(none.out == "none within radius 2\n");
  const Run lf =
    run({"leftfree", "--point", data("spike.pt"), "--g", "c", "--gp", "1", "--radius", "2", "--lf"});
  CHECK(lf.code == 0);
}

TEST_CASE("usage and input errors exit with 2")
{
  CHECK(run({"enum", "--k", "2", "--count", "3", "--bogus"}).code == 2);
  CHECK(run({"enum", "--k", "4", "--count", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"pi", "--a", "x", "--k", "1"}).code == 2);
  CHECK(run({"fw", "--w", "1", "--point", data("spike.pt"), "--at", "1"}).code == 2);
  CHECK(run({"embed", "--point", data("constant0.pt"), "--at", "a"}).code == 2);
  CHECK(run({"encode", "--point", data("missing.pt"), "--coords", "1"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "shiftred_cli_bad.pt";
  {
    std::ofstream file(path);
    file << "labeling fin-support k=2 alphabet=2 default=0\nset aX 1\n";
  }
  const Run bad = run({"encode", "--point", path.string(), "--coords", "1"});
  std::filesystem::remove(path);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("shiftred_cli_bad.pt:2: invalid letter") != std::string::npos);
}

TEST_CASE("verify output depends on the seed only")
{
  const Run first = run({"verify", "enumeration", "--seed", "3"});
  const Run second = run({"verify", "enumeration", "--seed", "3"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.size() > 9);
  CHECK(first.out.substr(first.out.size() - 9) == "ALL PASS\n");
  CHECK(run({"verify", "relations", "--seed", "11", "--depth", "2"}).code == 0);
}
