#include <doctest.h>

#include <sstream>

#include "shiftred/report.hpp"

using namespace shiftred;

TEST_CASE("records render sorted by suite and case")
{
  Report r;
  r.add(Status::pass, "b", "x", "fine");
  r.add(Status::pass, "a", "z", "fine");
  r.add(Status::pass, "a", "y", "fine");
  std::ostringstream out;
  r.render(out);
  CHECK(out.str() == "PASS\ta\ty\tfine\nPASS\ta\tz\tfine\nPASS\tb\tx\tfine\nALL PASS\n");
  CHECK(r.exit_code() == 0);
}

TEST_CASE("failures and inconclusive cases")
{
  Report r;
  r.add(Status::inconclusive, "s", "maybe", "why");
  r.add(Status::fail, "s", "broken", "at w");
  CHECK(r.count(Status::fail) == 1);
  CHECK(r.count(Status::inconclusive) == 1);
  std::ostringstream out;
  r.render(out);
  CHECK(out.str() ==
        "FAIL\ts\tbroken\tat w\nINCONCLUSIVE\ts\tmaybe\twhy\n"
        "warning: 1 inconclusive case(s)\n1 of 2 case(s) FAILED\n");
  CHECK(r.exit_code() == 1);

  Report open;
  open.add(Status::inconclusive, "s", "maybe", "why");
  CHECK(open.exit_code() == 0);
}

TEST_CASE("merge keeps every record")
{
  Report a, b;
  a.add(Status::pass, "s", "1", "");
  b.add(Status::fail, "s", "2", "");
  a.merge(b);
  CHECK(a.records().size() == 2);
  CHECK(a.exit_code() == 1);
}

TEST_CASE("tallies")
{
  Report r;
  CaseTally ok;
  ok.pass();
  ok.pass();
  ok.record(r, "s", "ok", "two checks");

  CaseTally bad;
  bad.pass();
  bad.fail("first");
  bad.fail("second");
  bad.inconclusive("ignored");
  CHECK(bad.failed());
  CHECK(bad.checked() == 4);
  bad.record(r, "s", "bad", "unused");

  CaseTally open;
  open.pass();
  open.inconclusive("no verdict");
  open.record(r, "s", "open", "unused");

  const auto records = r.sorted();
  REQUIRE(records.size() == 3);
  CHECK(records[0].status == Status::fail);
  CHECK(records[0].detail == "2 of 4 failed; first: first");
  CHECK(records[1].status == Status::pass);
  CHECK(records[1].detail == "two checks (2)");
  CHECK(records[2].status == Status::inconclusive);
  CHECK(records[2].detail == "1 of 2 undecided; first: no verdict");
}
