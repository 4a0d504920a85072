#include <algorithm>
#include <map>
#include <set>

#include "shiftred/encoding.hpp"
#include "shiftred/oracles.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

const char* const kSuite = "pi-group";

// Index <-> word of F_2 from the exhaustive shortlex listing.
class WordTable
{
public:
  explicit WordTable(unsigned radius)
  {
    for (const auto& s : oracle::reduced_strings(2, radius)) {
      index_.emplace(Word::reduce(2, s), static_cast<Index>(words_.size()));
      words_.push_back(Word::reduce(2, s));
    }
  }

  std::size_t size() const { return words_.size(); }
  const Word& word(Index n) const { return words_.at(n); }
  Index index(const Word& w) const { return index_.at(w); }

private:
  std::vector<Word> words_;
  std::map<Word, Index> index_;
};

void pairing(const SuiteConfig& config, Report& report)
{
  CaseTally tally;
  for (Index n = 0; n <= 100; ++n)
    for (Index m = 0; m <= 100; ++m) {
      const Index k = pair(n, m);
      if (k != oracle::pair_by_walk(n, m) || unpair(k) != std::pair(n, m))
        tally.fail("<" + std::to_string(n) + "," + std::to_string(m) + "> = " +
                   std::to_string(k));
      else
        tally.pass();
    }
  for (Index k = 0; k <= config.pi_max_k; ++k) {
    const auto [n, m] = unpair(k);
    if (pair(n, m) != k)
      tally.fail("unpair(" + std::to_string(k) + ") does not pair back");
    else
      tally.pass();
  }
  tally.record(report, kSuite, "pairing", "Cantor pairing matches the diagonal walk");
}

// radius covering g_n g_a for every n = unpair(k).first with k <= max_k, and a <= max_a
unsigned table_radius(Index max_k, Index max_a)
{
  Index max_n = 0;
  for (Index k = 0; k <= max_k; ++k)
    max_n = std::max(max_n, unpair(k).first);
  return static_cast<unsigned>(word_of_index(2, max_n).length() +
                               word_of_index(2, max_a).length());
}

Index oracle_pi(const WordTable& table, Index a, Index k)
{
  const auto [n, m] = unpair(k);
  return pair(table.index(table.word(n) * table.word(a)), m);
}

void permutations(const SuiteConfig& config, const WordTable& table, Report& report)
{
  CaseTally fixes, bijective, matches;
  for (Index a = 0; a <= config.pi_max_a; ++a) {
    const Index a_inv = table.index(table.word(a).inverse());
    std::set<Index> images;
    bool fixed = true, inverted = true, agree = true;
    Index bad = 0;
    for (Index k = 0; k <= config.pi_max_k; ++k) {
      const Index image = pi_apply(a, k);
      images.insert(image);
      if (unpair(image).second != unpair(k).second && fixed) {
        fixed = false;
        bad = k;
      }
      if (pi_apply(a_inv, image) != k && inverted) {
        inverted = false;
        bad = k;
      }
      if (image != oracle_pi(table, a, k) && agree) {
        agree = false;
        bad = k;
      }
    }
    const std::string where = "a = " + std::to_string(a) + ", k = " + std::to_string(bad);
    fixed ? fixes.pass() : fixes.fail("second coordinate moved at " + where);
    if (!inverted || images.size() != config.pi_max_k + 1)
      bijective.fail("pi_{index(g_a^-1)} does not undo pi_a at " + where);
    else
      bijective.pass();
    agree ? matches.pass() : matches.fail("pi_a(k) disagrees with the word table at " + where);
  }
  const std::string range = "a <= " + std::to_string(config.pi_max_a) +
                            ", k <= " + std::to_string(config.pi_max_k);
  fixes.record(report, kSuite, "fixes-second-coordinate", range);
  bijective.record(report, kSuite, "bijective", range);
  matches.record(report, kSuite, "right-regular", range);
}

void composition(const SuiteConfig& config, const WordTable& table, Report& report)
{
  CaseTally tally;
  for (Index a = 0; a <= config.hom_max_a; ++a)
    for (Index b = 0; b <= config.hom_max_a; ++b) {
      const Index c = table.index(table.word(a) * table.word(b));
      if (pi_compose_index(a, b) != c) {
        tally.fail("pi_compose_index(" + std::to_string(a) + "," + std::to_string(b) +
                   ") = " + std::to_string(pi_compose_index(a, b)) + ", expected " +
                   std::to_string(c));
        continue;
      }
      bool ok = true;
      for (Index k = 0; k <= config.hom_max_k && ok; ++k)
        if (pi_apply(b, pi_apply(a, k)) != pi_apply(c, k)) {
          tally.fail("pi_b(pi_a(k)) != pi_c(k) at a = " + std::to_string(a) + ", b = " +
                     std::to_string(b) + ", k = " + std::to_string(k));
          ok = false;
        }
      if (ok)
        tally.pass();
    }
  tally.record(report, kSuite, "anti-homomorphism",
               "pi_b o pi_a = pi_index(g_a g_b) for a,b <= " + std::to_string(config.hom_max_a) +
                 ", k <= " + std::to_string(config.hom_max_k));
}

}  // namespace

void run_pi_group_suite(const SuiteConfig& config, Report& report)
{
  pairing(config, report);
  const Index max_k = std::max(config.pi_max_k, config.hom_max_k);
  const Index max_a = std::max(config.pi_max_a, config.hom_max_a);
  const WordTable table(table_radius(max_k, max_a));
  permutations(config, table, report);
  composition(config, table, report);
}

}  // namespace shiftred
