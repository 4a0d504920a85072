#include "sampling.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "left-free";

using detail::Rng;

std::vector<Labeling> sample_points(Rng& rng)
{
  std::vector<Labeling> out{Labeling::constant(2, 2, 0)};
  for (int i = 0; i < 6; ++i)
    out.push_back(detail::random_fin_support(rng, 2, 2, 3, 4));
  for (int i = 0; i < 3; ++i)
    out.push_back(detail::random_quotient(rng, 2, 2, 6));
  return out;
}

void values(const SuiteConfig& config, const std::vector<Labeling>& points, Report& report)
{
  CaseTally tally;
  for (const Labeling& x : points) {
    const Labeling image = lf_embed(x);
    for (const Word& h : cached_words_up_to(3, config.lf_value_radius)) {
      const Symbol v = image.eval(h);
      const bool low = v <= 1;
      if (low != h.lies_in(2) || v > 3)
        tally.fail("value " + std::to_string(v) + " at " + h.str() + " for " + x.describe());
      else if (h.lies_in(2) && v != x.eval(h.with_rank(2)))
        tally.fail("F_2 position " + h.str() + " does not copy x for " + x.describe());
      else
        tally.pass();
    }
  }
  tally.record(report, kSuite, "values",
               "{0,1} exactly on F_2, {2,3} elsewhere, on B_3(" +
                 std::to_string(config.lf_value_radius) + ")");
}

void z0_witnesses(const SuiteConfig& config, Report& report)
{
  CaseTally tally;
  const Labeling z = z0();
  for (const Word& g : cached_words_up_to(2, 1))
    for (const Word& u : cached_words_up_to(2, config.z0_length)) {
      if (u.is_identity())
        continue;
      const Word gp = g * u;
      const Word h = z0_witness(g, gp);
      const Index k = (u.length() + 2) / 2;  // ceil((|u|+1)/2)
      const Index bound = k * k + g.length();
      const std::string where = "g = " + g.str() + ", u = " + u.str() + ", h = " + h.str();
      if (z0_witness_bound(g, gp) != bound)
        tally.fail("bound " + std::to_string(z0_witness_bound(g, gp)) + " != " +
                   std::to_string(bound) + " at " + where);
      else if (h.length() > bound)
        tally.fail("|h| = " + std::to_string(h.length()) + " exceeds " + std::to_string(bound) +
                   " at " + where);
      else if (z.eval(h * g) == z.eval(h * gp))
        tally.fail("z0(hg) = z0(hg') at " + where);
      else
        tally.pass();
    }
  tally.record(report, kSuite, "z0-witness",
               "witness within k^2 + |g| for all 0 < |u| <= " + std::to_string(config.z0_length));
}

void image_witnesses(const SuiteConfig& config, const std::vector<Labeling>& points,
                     Report& report)
{
  CaseTally constructive, searched;
  const auto& words = cached_words_up_to(3, config.lf_pair_radius);
  for (const Labeling& x : points) {
    const Labeling image = lf_embed(x);
    for (const Word& g : words)
      for (const Word& gp : words) {
        if (g == gp)
          continue;
        const Index bound = lf_witness_bound(g, gp);
        const std::string where =
          "g = " + g.str() + ", g' = " + gp.str() + ", x = " + x.describe();

        const Word h = lf_witness(g, gp);
        if (h.length() > bound || image.eval(h * g) == image.eval(h * gp))
          constructive.fail("h = " + h.str() + " fails at " + where);
        else
          constructive.pass();

        const auto found = left_free_witness(image, g, gp, static_cast<unsigned>(bound));
        if (!found)
          searched.fail("no witness within " + std::to_string(bound) + " at " + where);
        else if (image.eval(*found * g) == image.eval(*found * gp))
          searched.fail("search returned non-witness " + found->str() + " at " + where);
        else
          searched.pass();
      }
  }
  const std::string range = "all g != g' in B_3(" + std::to_string(config.lf_pair_radius) + ")";
  constructive.record(report, kSuite, "image-witness-constructive", range);
  searched.record(report, kSuite, "image-witness-search", range);
}

}  // namespace

void run_left_free_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 7);
  const std::vector<Labeling> points = sample_points(rng);
  values(config, points, report);
  z0_witnesses(config, report);
  image_witnesses(config, points, report);
}

}  // namespace shiftred
