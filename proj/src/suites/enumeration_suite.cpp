#include <algorithm>
#include <set>

#include "shiftred/oracles.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "enumeration";

// |B_k(1,m)| for m = 0..6
constexpr Index kBallF2[] = {1, 5, 17, 53, 161, 485, 1457};
constexpr Index kBallF3[] = {1, 7, 37, 187, 937, 4687, 23437};

std::string rank_tag(int rank) { return "k" + std::to_string(rank); }

void index_roundtrip(const SuiteConfig& config, int rank, Report& report)
{
  CaseTally tally;
  Word previous = word_of_index(rank, 0);
  for (Index n = 0; n < config.roundtrip_count; ++n) {
    const Word w = word_of_index(rank, n);
    const Index back = index_of_word(w);
    if (back != n)
      tally.fail("index(g_" + std::to_string(n) + " = " + w.str() + ") = " + std::to_string(back));
    else if (n > 0 && !(previous < w))
      tally.fail("g_" + std::to_string(n) + " = " + w.str() + " does not follow " + previous.str());
    else
      tally.pass();
    previous = w;
  }
  tally.record(report, kSuite, "index-roundtrip-" + rank_tag(rank),
               "index(g_n) = n for n < " + std::to_string(config.roundtrip_count));
}

void word_roundtrip(const SuiteConfig& config, int rank, Report& report)
{
  // the oracle lists reduced strings in shortlex order, so position = index
  CaseTally tally;
  const auto strings = oracle::reduced_strings(rank, config.roundtrip_length);
  for (std::size_t pos = 0; pos < strings.size(); ++pos) {
    const Word w = Word::reduce(rank, strings[pos]);
    const Index n = index_of_word(w);
    if (n != pos)
      tally.fail(w.str() + " has index " + std::to_string(n) + ", expected " +
                 std::to_string(pos));
    else if (word_of_index(rank, n) != w)
      tally.fail("g_" + std::to_string(n) + " = " + word_of_index(rank, n).str() + " != " +
                 w.str());
    else
      tally.pass();
  }
  tally.record(report, kSuite, "word-roundtrip-" + rank_tag(rank),
               "g_index(w) = w for |w| <= " + std::to_string(config.roundtrip_length));
}

void ball_sizes(const SuiteConfig& config, int rank, Report& report)
{
  CaseTally tally;
  const Index* table = rank == 2 ? kBallF2 : kBallF3;
  for (unsigned m = 0; m <= config.ball_radius; ++m) {
    const Index formula = oracle::ball_size_formula(rank, m);
    const Index computed = ball_size(rank, m);
    if (m <= 6 && table[m] != formula)
      tally.fail("closed form gives " + std::to_string(formula) + " at m = " + std::to_string(m));
    else if (computed != formula)
      tally.fail("ball_size(" + std::to_string(m) + ") = " + std::to_string(computed) +
                 ", expected " + std::to_string(formula));
    else
      tally.pass();
  }

  for (const Word& c : words_up_to(rank, config.center_radius))
    for (unsigned m = 0; m <= config.ball_radius; ++m) {
      const Ball b = ball(c, m);
      std::vector<Word> sorted = b.elements;
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      const bool near = std::all_of(b.elements.begin(), b.elements.end(), [&](const Word& g) {
        return (c.inverse() * g).length() <= m;
      });
      if (b.elements.size() != oracle::ball_size_formula(rank, m) || !distinct || !near)
        tally.fail("ball(" + c.str() + ", " + std::to_string(m) + ") has " +
                   std::to_string(b.elements.size()) + " elements" +
                   (distinct ? "" : ", repeated") + (near ? "" : ", some too far"));
      else
        tally.pass();
    }
  tally.record(report, kSuite, "ball-size-" + rank_tag(rank),
               "ball sizes match the closed form for m <= " + std::to_string(config.ball_radius));
}

void ball_brute(const SuiteConfig& config, int rank, Report& report)
{
  CaseTally tally;
  for (const Word& c : words_up_to(rank, config.center_radius))
    for (unsigned m = 0; m <= config.brute_ball_radius; ++m) {
      const Ball b = ball(c, m);
      const std::set<Word> computed(b.elements.begin(), b.elements.end());
      const std::set<Word> expected = oracle::ball_set(c, m);
      if (computed != expected)
        tally.fail("ball(" + c.str() + ", " + std::to_string(m) + ") differs from exhaustive "
                   "generation (" + std::to_string(computed.size()) + " vs " +
                   std::to_string(expected.size()) + ")");
      else
        tally.pass();
    }
  tally.record(report, kSuite, "ball-exhaustive-" + rank_tag(rank),
               "balls equal exhaustive products for m <= " +
                 std::to_string(config.brute_ball_radius));
}

void group_laws(const SuiteConfig& config, Report& report)
{
  CaseTally tally;
  const auto words = words_up_to(2, config.associativity_length);
  const Word one(2);
  for (const Word& x : words) {
    if (x * x.inverse() != one || x.inverse() * x != one || x * one != x || one * x != x) {
      tally.fail("inverse or identity law fails at " + x.str());
      continue;
    }
    for (const Word& y : words)
      for (const Word& z : words) {
        if ((x * y) * z != x * (y * z))
          tally.fail("(xy)z != x(yz) for x = " + x.str() + ", y = " + y.str() + ", z = " +
                     z.str());
        else
          tally.pass();
      }
  }
  tally.record(report, kSuite, "group-laws",
               "associativity on B_2(" + std::to_string(config.associativity_length) + ")^3");
}

Word c_power(Sign sign, unsigned p)
{
  return power(Word::generator(3, 2, sign == Sign::minus), static_cast<long>(p));
}

void decompositions(const SuiteConfig& config, Report& report)
{
  CaseTally prefix, suffix;
  for (const Word& g : words_up_to(3, config.decomposition_length)) {
    const auto block = decompose_prefix_block(g);
    if (std::holds_alternative<InF2>(block)) {
      if (g.lies_in(2))
        prefix.pass();
      else
        prefix.fail(g.str() + " reported inside F_2");
    } else {
      const auto& b = std::get<PrefixBlock>(block);
      const bool tail_ok = b.tail.is_identity() || generator_of(b.tail.front()) != 2;
      if (b.head.rank() != 2 || b.power == 0 || !tail_ok ||
          b.head.with_rank(3) * c_power(b.sign, b.power) * b.tail != g)
        prefix.fail(g.str() + " = " + b.head.str() + " c^" +
                    (b.sign == Sign::minus ? "-" : "") + std::to_string(b.power) + " " +
                    b.tail.str());
      else
        prefix.pass();
    }

    const auto split = decompose_suffix_f2(g);
    if (std::holds_alternative<InF2>(split)) {
      if (g.lies_in(2))
        suffix.pass();
      else
        suffix.fail(g.str() + " reported inside F_2");
    } else {
      const auto& s = std::get<SuffixSplit>(split);
      if (s.suffix.rank() != 2 || s.prefix * c_power(s.sign, 1) * s.suffix.with_rank(3) != g)
        suffix.fail(g.str() + " = " + s.prefix.str() + " c^" +
                    (s.sign == Sign::minus ? "-1 " : "1 ") + s.suffix.str());
      else
        suffix.pass();
    }
  }
  const std::string range = "all g in B_3(" + std::to_string(config.decomposition_length) + ")";
  prefix.record(report, kSuite, "prefix-block", range);
  suffix.record(report, kSuite, "suffix-split", range);
}

}  // namespace

void run_enumeration_suite(const SuiteConfig& config, Report& report)
{
  for (int rank : {2, 3}) {
    index_roundtrip(config, rank, report);
    word_roundtrip(config, rank, report);
    ball_sizes(config, rank, report);
    ball_brute(config, rank, report);
  }
  group_laws(config, report);
  decompositions(config, report);
}

}  // namespace shiftred
