#include "sampling.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "encoder";

using detail::Rng;

Word lifted(Index n) { return word_of_index(2, n).with_rank(3); }

// Deliberately broken encoders; each must be caught by verify_forward.
Encoder radius_off_by_one()
{
  return [](const Labeling& x, Index k) {
    const auto [n, m] = unpair(k);
    return Coordinate{n, m + 1, shift(lifted(n), embed_2to9(x))};
  };
}

Encoder swapped_pairing()
{
  return [](const Labeling& x, Index k) {
    const auto [m, n] = unpair(k);
    return Coordinate{n, m, shift(lifted(n), embed_2to9(x))};
  };
}

Encoder inverted_shift()
{
  return [](const Labeling& x, Index k) {
    const auto [n, m] = unpair(k);
    return Coordinate{n, m, shift(lifted(n).inverse(), embed_2to9(x))};
  };
}

struct Sample
{
  Labeling x;
  Index a;
};

std::vector<Sample> forward_samples(const SuiteConfig& config, Rng& rng)
{
  std::vector<Sample> out;
  for (unsigned i = 0; i < config.forward_samples; ++i) {
    Labeling x = i % 3 == 2 ? detail::random_quotient(rng, 2, 2, 6)
                            : detail::random_fin_support(rng, 2, 2, 3, 4);
    out.push_back({std::move(x), rng.below(config.forward_max_a + 1)});
  }
  return out;
}

void forward(const SuiteConfig& config, const std::vector<Sample>& samples, Report& report)
{
  CaseTally tally;
  for (const Sample& s : samples) {
    const ForwardResult r = verify_forward(s.x, s.a, config.forward_coords);
    const std::string where = " for a = " + std::to_string(s.a) + ", x = " + s.x.describe();
    switch (r.status) {
      case ForwardResult::Status::pass:
        tally.pass();
        break;
      case ForwardResult::Status::fail:
        tally.fail(to_string(r) + where);
        break;
      case ForwardResult::Status::inconclusive:
        tally.inconclusive(to_string(r) + where);
        break;
    }
  }
  tally.record(report, kSuite, "forward",
               "y = g_a.x => y* = x* o pi_a, a <= " + std::to_string(config.forward_max_a) +
                 ", K = " + std::to_string(config.forward_coords));
}

void mutants(const SuiteConfig& config, const std::vector<Sample>& samples, Report& report)
{
  const std::pair<const char*, Encoder> cases[] = {
    {"mutant-inverted-shift", inverted_shift()},
    {"mutant-radius-plus-one", radius_off_by_one()},
    {"mutant-swapped-pairing", swapped_pairing()},
  };
  for (const auto& [name, encoder] : cases) {
    // the first samples with a != 0 and a point that is not constant
    std::optional<std::string> caught;
    unsigned tried = 0;
    for (const Sample& s : samples) {
      if (s.a == 0 || tried == 10)
        continue;
      const FinSupport* fs = s.x.as_fin_support();
      if (fs && fs->values.empty())
        continue;
      ++tried;
      const ForwardResult r = verify_forward(s.x, s.a, config.forward_coords, encoder);
      if (r.status == ForwardResult::Status::fail) {
        caught = to_string(r) + " for a = " + std::to_string(s.a) + ", x = " + s.x.describe();
        break;
      }
    }
    if (caught)
      report.add(Status::pass, kSuite, name, "detected: " + *caught);
    else
      report.add(Status::fail, kSuite, name,
                 "verify_forward passed the broken encoder on " + std::to_string(tried) +
                   " samples");
  }
}

void refutation(const SuiteConfig& config, Rng& rng, Report& report)
{
  CaseTally tally;
  for (unsigned i = 0; i < config.refute_pairs; ++i) {
    const Labeling x = detail::random_fin_support(rng, 2, 2, 3, 4);
    // y differs from x at the identity only, so it has a different support size
    const FinSupport& fs = *x.as_fin_support();
    std::map<Word, Symbol> values = fs.values;
    values[Word(2)] = 1 - x.eval(Word(2));
    const Labeling y = Labeling::fin_support(2, 2, fs.background, values);

    const RefuteResult r = refute_equivalence(x, y, config.refute_max_a, config.refute_coords);
    if (!r.refuted())
      tally.fail(to_string(r) + " for x = " + x.describe());
    else
      tally.pass();
  }
  tally.record(report, kSuite, "refutation",
               "RefutedUpTo(" + std::to_string(config.refute_max_a) + ") with K = " +
                 std::to_string(config.refute_coords));
}

}  // namespace

void run_encoder_suite(const SuiteConfig& config, Report& report)
{
  Rng rng(config.seed, 6);
  const std::vector<Sample> samples = forward_samples(config, rng);
  forward(config, samples, report);
  mutants(config, samples, report);
  refutation(config, rng, report);
}

}  // namespace shiftred
