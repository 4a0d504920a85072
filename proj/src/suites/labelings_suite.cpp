#include "sampling.hpp"
#include "shiftred/point_file.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "labelings";

using detail::Rng;

// first h in B(1,radius) with x(h) != y(h), by direct evaluation
std::optional<Word> brute_difference(const Labeling& x, const Labeling& y, unsigned radius)
{
  for (const Word& h : cached_words_up_to(x.rank(), radius))
    if (x.eval(h) != y.eval(h))
      return h;
  return std::nullopt;
}

void shift_action(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  for (unsigned i = 0; i < config.action_samples; ++i) {
    const int rank = rng.coin() ? 2 : 3;
    const Labeling x = detail::random_decidable(rng, rank, 2 + static_cast<unsigned>(rng.below(3)));
    const Word g = detail::random_word(rng, rank, 3);
    const Word gp = detail::random_word(rng, rank, 3);
    const auto identity = brute_difference(shift(Word(rank), x), x, config.action_radius);
    const auto composed =
      brute_difference(shift(g, shift(gp, x)), shift(g * gp, x), config.action_radius);
    if (identity)
      tally.fail("1.x != x at " + identity->str() + " for " + x.describe());
    else if (composed)
      tally.fail("g.(g'.x) != (gg').x at " + composed->str() + " for g = " + g.str() +
                 ", g' = " + gp.str() + ", x = " + x.describe());
    else
      tally.pass();

    // (g.x)(h) = x(g^-1 h), literally
    const Labeling moved = shift(g, x);
    for (const Word& h : cached_words_up_to(rank, 2))
      if (moved.eval(h) != x.eval(g.inverse() * h)) {
        tally.fail("(g.x)(h) != x(g^-1 h) at h = " + h.str() + " for g = " + g.str());
        break;
      }
  }
  tally.record(report, kSuite, "shift-action",
               "action laws on B(1," + std::to_string(config.action_radius) + ")");
}

// A pair that is equal about a third of the time.
std::pair<Labeling, Labeling> related_pair(Rng& rng, int rank)
{
  const Labeling x = detail::random_decidable(rng, rank, 2);
  switch (rng.below(3)) {
    case 0:
      return {x, x};
    case 1:
      return {x, shift(detail::random_word(rng, rank, 2), x)};
    default:
      // same class, so the comparison is decidable
      return {x, x.as_fin_support() ? detail::random_fin_support(rng, rank, 2, 3, 4)
                                    : detail::random_quotient(rng, rank, 2, 6)};
  }
}

void equality(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally symmetric, witnesses, consistent;
  for (unsigned i = 0; i < config.equality_samples; ++i) {
    const int rank = rng.coin() ? 2 : 3;
    const auto [x, y] = related_pair(rng, rank);
    const Verdict xy = equal_points(x, y, 6);
    const Verdict yx = equal_points(y, x, 6);
    const std::string pair_text = x.describe() + " vs " + y.describe();

    if (xy.kind() != yx.kind())
      symmetric.fail(xy.str() + " but reversed " + yx.str() + " for " + pair_text);
    else
      symmetric.pass();

    for (const Verdict& v : {xy, yx})
      if (v.is_distinct()) {
        if (x.eval(v.witness()) == y.eval(v.witness()))
          witnesses.fail("witness " + v.witness().str() + " does not separate " + pair_text);
        else
          witnesses.pass();
      }

    if (xy.is_equal()) {
      const auto h = brute_difference(x, y, 4);
      h ? consistent.fail("Equal, yet points differ at " + h->str() + " for " + pair_text)
        : consistent.pass();
    } else if (xy.is_unknown()) {
      consistent.inconclusive(pair_text);
    } else {
      consistent.pass();
    }
  }
  symmetric.record(report, kSuite, "equal-symmetric", "verdict kinds agree both ways");
  witnesses.record(report, kSuite, "distinct-witness", "witnesses separate by direct eval");
  consistent.record(report, kSuite, "equal-consistent", "Equal points agree on B(1,4)");
}

unsigned support_length(const Labeling& x)
{
  unsigned out = 0;
  for (const auto& [w, sym] : x.as_fin_support()->values)
    out = std::max(out, static_cast<unsigned>(w.length()));
  return out;
}

void fin_support_brute(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  for (unsigned i = 0; i < config.equality_samples; ++i) {
    const int rank = rng.coin() ? 2 : 3;
    const Labeling x = detail::random_fin_support(rng, rank, 2, 3, 4);
    Labeling y = x;
    if (rng.below(3) != 0) {
      // perturb one value, possibly back to the same point
      const Word h = detail::random_word(rng, rank, 3);
      std::map<Word, Symbol> values = x.as_fin_support()->values;
      values[h] = static_cast<Symbol>(rng.below(2));
      y = Labeling::fin_support(rank, 2, x.as_fin_support()->background, values);
    }
    if (rng.below(4) == 0)
      y = Labeling::fin_support(rank, 2, 1 - y.as_fin_support()->background,
                                y.as_fin_support()->values);
    const unsigned radius = std::max(support_length(x), support_length(y)) + 1;
    const Verdict v = equal_points(x, y, 0);
    const auto brute = brute_difference(x, y, radius);
    if (v.is_unknown())
      tally.fail("Unknown for " + x.describe() + " vs " + y.describe());
    else if (v.is_equal() != !brute.has_value())
      tally.fail(v.str() + " but brute force over B(1," + std::to_string(radius) + ") says " +
                 (brute ? "distinct at " + brute->str() : "equal") + " for " + x.describe() +
                 " vs " + y.describe());
    else
      tally.pass();
  }
  tally.record(report, kSuite, "fin-support-brute",
               "equal_points matches exhaustive comparison past the supports");
}

void point_file_roundtrip(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  for (unsigned i = 0; i < config.action_samples; ++i) {
    const int rank = rng.coin() ? 2 : 3;
    const Labeling x = detail::random_decidable(rng, rank, 2 + static_cast<unsigned>(rng.below(8)));
    const std::string text = format_point(x);
    const Labeling back = parse_point_text(text);
    const Verdict v = equal_points(x, back, 4);
    if (!v.is_equal() || back.alphabet() != x.alphabet() || back.rank() != x.rank())
      tally.fail(v.str() + " after writing and reading " + x.describe());
    else
      tally.pass();
  }
  tally.record(report, kSuite, "point-file-roundtrip", "format then parse gives the same point");
}

}  // namespace

void run_labelings_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 3);
  shift_action(config, rng, report);
  equality(config, rng, report);
  fin_support_brute(config, rng, report);
  point_file_roundtrip(config, rng, report);
}

}  // namespace shiftred
