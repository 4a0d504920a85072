#include "sampling.hpp"
#include "shiftred/oracles.hpp"
#include "shiftred/relations.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "relations";

using detail::Rng;

std::vector<Symbol> random_symbols(Rng& rng, std::size_t n)
{
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(static_cast<Symbol>(rng.below(2)));
  return out;
}

EvPeriodicSeq random_sequence(Rng& rng)
{
  auto pre = random_symbols(rng, rng.below(6));
  return {std::move(pre), random_symbols(rng, 1 + rng.below(4))};
}

// Another representation of a sequence with the same tail: the preperiod absorbs r symbols
// of the period, the period is rotated by r and possibly doubled, and the head is scrambled.
EvPeriodicSeq same_tail(Rng& rng, const EvPeriodicSeq& x)
{
  const std::size_t r = rng.below(x.period.size() + 2);
  EvPeriodicSeq y;
  y.preperiod = x.preperiod;
  for (std::size_t i = 0; i < r; ++i)
    y.preperiod.push_back(x.period[i % x.period.size()]);
  for (std::size_t i = 0; i < x.period.size(); ++i)
    y.period.push_back(x.period[(r + i) % x.period.size()]);
  if (rng.coin())
    y.period.insert(y.period.end(), y.period.begin(), y.period.end());
  for (Symbol& s : y.preperiod)
    if (rng.below(3) == 0)
      s = 1 - s;
  return y;
}

std::pair<EvPeriodicSeq, EvPeriodicSeq> sequence_pair(Rng& rng)
{
  EvPeriodicSeq x = random_sequence(rng);
  EvPeriodicSeq y = rng.coin() ? same_tail(rng, x) : random_sequence(rng);
  return {std::move(x), std::move(y)};
}

std::string text(const EvPeriodicSeq& s)
{
  std::string out;
  for (Symbol v : s.preperiod)
    out += std::to_string(v);
  out += "(";
  for (Symbol v : s.period)
    out += std::to_string(v);
  return out + ")";
}

void e0(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  for (unsigned i = 0; i < config.e0_pairs; ++i) {
    const auto [x, y] = sequence_pair(rng);
    const bool got = e0_equiv(x, y);
    if (got != oracle::e0_by_tail(x, y))
      tally.fail("e0_equiv(" + text(x) + ", " + text(y) + ") = " + (got ? "true" : "false"));
    else
      tally.pass();
  }
  tally.record(report, kSuite, "e0-oracle", "e0_equiv agrees with the tail oracle");
}

void product(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally sequences, points;
  for (unsigned i = 0; i < config.product_pairs; ++i) {
    const auto [x1, y1] = sequence_pair(rng);
    const auto [x2, y2] = sequence_pair(rng);
    const Truth got = product_equiv<EvPeriodicSeq, EvPeriodicSeq>(e0_equiv, e0_equiv,
                                                                 {x1, x2}, {y1, y2});
    const bool expected = oracle::e0_by_tail(x1, y1) && oracle::e0_by_tail(x2, y2);
    if (got != truth(expected))
      sequences.fail("(" + text(x1) + "," + text(x2) + ") vs (" + text(y1) + "," + text(y2) + ")");
    else
      sequences.pass();
  }

  // E_0 x (equality of points of 2^{F_2}), where the second factor may be undecided
  auto point_equal = [](const Labeling& a, const Labeling& b) { return equal_points(a, b, 4); };
  for (unsigned i = 0; i < config.product_pairs; ++i) {
    const auto [x1, y1] = sequence_pair(rng);
    const Labeling x2 = detail::random_decidable(rng, 2, 2);
    const Labeling y2 = rng.coin() ? x2 : detail::random_decidable(rng, 2, 2);
    const Truth got =
      product_equiv<EvPeriodicSeq, Labeling>(e0_equiv, point_equal, {x1, x2}, {y1, y2});
    const bool first = oracle::e0_by_tail(x1, y1);
    const Verdict second = equal_points(x2, y2, 4);
    Truth expected = Truth::yes;
    if (!first || second.is_distinct())
      expected = Truth::no;
    else if (second.is_unknown())
      expected = Truth::unknown;
    if (got != expected)
      points.fail("(" + text(x1) + "," + x2.describe() + ") vs (" + text(y1) + "," +
                  y2.describe() + ")");
    else
      points.pass();
  }
  sequences.record(report, kSuite, "product-e0", "E_0 x E_0 is the componentwise conjunction");
  points.record(report, kSuite, "product-points",
                "E_0 x equality is the conjunction, Unknown unless refuted");
}

void orbits(Rng& rng, Report& report)
{
  CaseTally tally;
  const std::vector<Word> generators{Word::parse(2, "a"), Word::parse(2, "b")};
  for (int i = 0; i < 10; ++i) {
    const Labeling x = i % 2 ? detail::random_quotient(rng, 2, 2, 6)
                             : detail::random_fin_support(rng, 2, 2, 3, 4);
    const auto entries = orbit_sample(generators, x, 2);
    bool ok = entries.size() == ball_size(2, 2);
    for (const OrbitEntry& e : entries) {
      const OrbitEntry& rep = entries[e.representative];
      ok = ok && equal_points(e.point, shift(e.g, x), 0).is_equal() &&
           (e.unresolved || equal_points(e.point, rep.point, 0).is_equal());
    }
    ok ? tally.pass() : tally.fail("orbit sample inconsistent for " + x.describe());
  }
  tally.record(report, kSuite, "orbit-sample", "g.x over B_2(2), grouped by equality");
}

}  // namespace

void run_relations_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 8);
  e0(config, rng, report);
  product(config, rng, report);
  orbits(rng, report);
}

}  // namespace shiftred
