#include "sampling.hpp"
#include "shiftred/oracles.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "sublemma";

using detail::Rng;

std::vector<Word> fixed_words()
{
  const Schedule s = Schedule::standard();
  return {s.w(0, 0), s.w(0, 1), Word::parse(2, "a"), Word::parse(2, "ba")};
}

std::vector<Labeling> sample_points(const SuiteConfig& config, Rng& rng)
{
  std::vector<Labeling> out;
  while (out.size() < config.fin_support_samples) {
    Labeling x = detail::random_fin_support(rng, 2, 2, 3, 4);
    if (!x.as_fin_support()->values.empty())
      out.push_back(std::move(x));
  }
  for (unsigned i = 0; i < config.quotient_samples; ++i)
    out.push_back(detail::random_quotient(rng, 2, 2, 6));
  return out;
}

void contract(const SuiteConfig& config, const std::vector<Labeling>& points, Report& report)
{
  CaseTally implication, copies;
  const auto& positions = cached_words_up_to(2, config.sublemma_radius);
  for (const Word& w : fixed_words())
    for (const Labeling& x : points) {
      const Labeling image = fw(w, x);
      for (const Word& g : positions) {
        const Symbol here = image.eval(g);
        const Symbol there = image.eval(g * w);
        const Verdict roots = equal_points(root_view(x, g), root_view(x, g * w), 6);
        const std::string where =
          "w = " + w.str() + ", g = " + g.str() + ", x = " + x.describe();
        if (roots.is_unknown())
          implication.inconclusive(where);
        else if ((here == there) != roots.is_equal())
          implication.fail("f_w values " + std::to_string(here) + "/" + std::to_string(there) +
                           " at g, gw but roots " + roots.str() + " at " + where);
        else
          implication.pass();

        if (decode6(here).first != x.eval(g))
          copies.fail("first component differs from x(g) at " + where);
        else
          copies.pass();
      }
    }
  const std::string range = std::to_string(points.size()) + " points, 4 words, g in B_2(" +
                            std::to_string(config.sublemma_radius) + ")";
  implication.record(report, kSuite, "contract",
                     "f_w(x)(g) = f_w(x)(gw) iff g^-1.x = (gw)^-1.x; " + range);
  copies.record(report, kSuite, "first-component", "f_w(x)(g) carries x(g); " + range);
}

void equivariance(const SuiteConfig& config, const std::vector<Labeling>& points,
                  Report& report)
{
  // an even spread over both classes
  std::vector<const Labeling*> chosen;
  const unsigned quotients = config.equivariance_samples / 3;
  for (unsigned i = 0; i < config.equivariance_samples - quotients && i < points.size(); ++i)
    chosen.push_back(&points[i]);
  for (unsigned i = 0; i < quotients && config.fin_support_samples + i < points.size(); ++i)
    chosen.push_back(&points[config.fin_support_samples + i]);

  CaseTally tally;
  const auto& shifts = cached_words_up_to(2, config.equivariance_shift_radius);
  const auto& positions = cached_words_up_to(2, config.equivariance_radius);
  for (const Word& w : fixed_words())
    for (const Labeling* x : chosen) {
      const Labeling image = fw(w, *x);
      for (const Word& gp : shifts) {
        const Labeling lhs = fw(w, shift(gp, *x));
        const Labeling rhs = shift(gp, image);
        bool ok = true;
        for (const Word& g : positions)
          if (lhs.eval(g) != rhs.eval(g)) {
            tally.fail("f_w(g'.x)(g) != (g'.f_w(x))(g) for w = " + w.str() + ", g' = " +
                       gp.str() + ", g = " + g.str() + ", x = " + x->describe());
            ok = false;
            break;
          }
        if (ok)
          tally.pass();
      }
    }
  tally.record(report, kSuite, "equivariance",
               std::to_string(chosen.size()) + " points, g' in B_2(" +
                 std::to_string(config.equivariance_shift_radius) + "), g in B_2(" +
                 std::to_string(config.equivariance_radius) + ")");
}

void scan_oracle(const SuiteConfig& config, const std::vector<Labeling>& points, Report& report)
{
  CaseTally tally;
  const auto& positions = cached_words_up_to(2, config.sublemma_radius);
  for (const Labeling& x : points) {
    const QuotientPeriodic* q = x.as_quotient();
    if (!q)
      continue;
    const auto order = static_cast<long>(q->group->order());
    for (const Word& w : fixed_words())
      for (const Word& g : positions) {
        const SublemmaCase c = sublemma_case(w, root_view(x, g));
        // every element of Q is the image of a word of length < |Q|
        const oracle::ScanResult o =
          oracle::sublemma_scan(w, x, g, 4 * order, order, static_cast<unsigned>(order - 1));
        const bool same = (c.branch == SublemmaBranch::invariant) == o.invariant &&
                          (o.invariant || (c.branch == o.branch && c.radius == o.radius &&
                                           c.anchor == o.anchor && c.t == o.t));
        if (!same)
          tally.fail("case " + to_string(c.branch) + " n=" + std::to_string(c.radius) +
                     " anchor=" + std::to_string(c.anchor) + " t=" + std::to_string(c.t) +
                     ", scan " + to_string(o.branch) + " n=" + std::to_string(o.radius) +
                     " anchor=" + std::to_string(o.anchor) + " t=" + std::to_string(o.t) +
                     " for w = " + w.str() + ", g = " + g.str() + ", x = " + x.describe());
        else
          tally.pass();
      }
  }
  tally.record(report, kSuite, "scan-oracle",
               "quotient points, j in [-4|Q|, 4|Q|], g in B_2(" +
                 std::to_string(config.sublemma_radius) + ")");
}

}  // namespace

void run_sublemma_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 4);
  const std::vector<Labeling> points = sample_points(config, rng);
  contract(config, points, report);
  equivariance(config, points, report);
  scan_oracle(config, points, report);
}

}  // namespace shiftred
