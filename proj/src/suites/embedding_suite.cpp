#include <set>

#include "sampling.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "embedding";

using detail::Rng;

void schedule_conditions(Report& report)
{
  const Schedule s = Schedule::standard();
  CaseTally order, distinct, lookup;
  std::set<Index> m_values;
  for (Index i = 0; i <= 100; ++i)
    for (Index j = 0; j <= 100; ++j) {
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!(0 < s.n(i, j) && s.n(i, j) < s.n(i, j + 1) && 0 < s.m(i, j) &&
            s.m(i, j) < s.m(i, j + 1)))
        order.fail("condition (a) fails at " + at);
      else if (s.w(i, j) != word_of_index(2, s.n(i, j)) * word_of_index(2, s.n(i, j + 1)).inverse())
        order.fail("w" + at + " = " + s.w(i, j).str());
      else
        order.pass();

      m_values.insert(s.m(i, j)).second ? distinct.pass()
                                 : distinct.fail("m" + at + " = " + std::to_string(s.m(i, j)) +
                                                 " repeats");

      const auto back = s.lookup(s.m(i, j));
      if (!back || *back != std::pair(i, j))
        lookup.fail("lookup(m" + at + ") does not return " + at);
      else
        lookup.pass();
    }
  for (Index m = 1; m <= 5000; ++m) {
    const auto back = s.lookup(m);
    if (!back || s.m(back->first, back->second) != m)
      lookup.fail(std::to_string(m) + " is not an m-value");
    else
      lookup.pass();
  }
  order.record(report, kSuite, "schedule-a", "0 < n(i,j) < n(i,j+1), 0 < m(i,j) < m(i,j+1), i,j <= 100");
  distinct.record(report, kSuite, "schedule-b", "m injective on i,j <= 100");
  lookup.record(report, kSuite, "schedule-lookup", "lookup inverts m; every m <= 5000 is hit");
}

void equivariance(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  const auto& shifts = cached_words_up_to(2, 2);
  const auto& positions = cached_words_up_to(3, config.embed_equivariance_radius);
  for (unsigned i = 0; i < 15; ++i) {
    const Labeling x = i < 10 ? detail::random_fin_support(rng, 2, 2, 3, 4)
                              : detail::random_quotient(rng, 2, 2, 6);
    const Labeling image = embed_2to9(x);
    for (const Word& g : shifts) {
      const Labeling lhs = embed_2to9(shift(g, x));
      const Labeling rhs = shift(g.with_rank(3), image);
      bool ok = true;
      for (const Word& h : positions)
        if (lhs.eval(h) != rhs.eval(h)) {
          tally.fail("f(g.x)(h) != (g.f(x))(h) for g = " + g.str() + ", h = " + h.str() +
                     ", x = " + x.describe());
          ok = false;
          break;
        }
      if (ok)
        tally.pass();
    }
  }
  tally.record(report, kSuite, "equivariance",
               "g in B_2(2), positions B_3(" + std::to_string(config.embed_equivariance_radius) +
                 ")");
}

unsigned support_length(const FinSupport& s)
{
  unsigned out = 0;
  for (const auto& [w, sym] : s.values)
    out = std::max(out, static_cast<unsigned>(w.length()));
  return out;
}

void injectivity(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  unsigned made = 0;
  while (made < config.injectivity_pairs) {
    const Labeling x = detail::random_fin_support(rng, 2, 2, 3, 4);
    const Labeling y = detail::random_fin_support(rng, 2, 2, 3, 4);
    if (!equal_points(x, y, 0).is_distinct())
      continue;
    ++made;
    // B_2(0) can be covered by a support while the backgrounds differ, hence radius >= 1
    const unsigned radius = std::max(
      {support_length(*x.as_fin_support()), support_length(*y.as_fin_support()), 1u});
    const Labeling fx = embed_2to9(x);
    const Labeling fy = embed_2to9(y);
    bool found = false;
    for (const Word& h : cached_words_up_to(3, radius))
      if (fx.eval(h) != fy.eval(h)) {
        found = true;
        break;
      }
    found ? tally.pass()
          : tally.fail("images agree on B_3(" + std::to_string(radius) + ") for " +
                       x.describe() + " vs " + y.describe());
  }
  tally.record(report, kSuite, "injectivity", "distinct fin-support pairs have distinct images");
}

void images_in_a(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  const Index imax = config.check_a_max_m, jmax = config.check_a_max_m;
  for (unsigned i = 0; i < config.check_a_images; ++i) {
    const Labeling x = i % 3 == 2 ? detail::random_quotient(rng, 2, 2, 6)
                                  : detail::random_fin_support(rng, 2, 2, 3, 4);
    const CheckAResult r =
      check_A(embed_2to9(x), imax, jmax, Schedule::standard(), config.check_a_max_m);
    switch (r.status) {
      case CheckAResult::Status::pass:
        tally.pass();
        break;
      case CheckAResult::Status::counterexample:
        tally.fail(to_string(r) + " for the image of " + x.describe());
        break;
      case CheckAResult::Status::inconclusive:
        tally.inconclusive(to_string(r) + " for the image of " + x.describe());
        break;
    }
  }
  tally.record(report, kSuite, "check-a",
               "images pass check_A for m(i,j) <= " + std::to_string(config.check_a_max_m));
}

void counterexample(Report& report)
{
  CaseTally tally;
  const Labeling y =
    Labeling::fin_support(3, 9, 0, {{Word::parse(3, "Abb"), 1}});
  const CheckAResult r = check_A(y, 0, 0);
  if (r.status != CheckAResult::Status::counterexample || r.i != 0 || r.j != 0 || !r.witness) {
    tally.fail(to_string(r));
  } else {
    const Schedule s = Schedule::standard();
    const Labeling left = shift(word_of_index(2, s.n(0, 0)).with_rank(3), y);
    const Labeling right = shift(word_of_index(2, s.n(0, 1)).with_rank(3), y);
    if (left.eval(*r.witness) == right.eval(*r.witness))
      tally.fail("witness " + r.witness->str() + " does not separate the shifted points");
    else
      tally.pass();
  }
  tally.record(report, kSuite, "counterexample", "fin-support(0,{Abb:1}) gives Counterexample(0,0)");
}

}  // namespace

void run_embedding_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 5);
  schedule_conditions(report);
  equivariance(config, rng, report);
  injectivity(config, rng, report);
  images_in_a(config, rng, report);
  counterexample(report);
}

}  // namespace shiftred
