#include "shiftred/relations.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace shiftred {

Symbol EvPeriodicSeq::at(Index n) const
{
  if (n < preperiod.size())
    return preperiod[n];
  if (period.empty())
    throw std::invalid_argument("eventually periodic sequence needs a nonempty period");
  return period[(n - preperiod.size()) % period.size()];
}

bool e0_equiv(const EvPeriodicSeq& x, const EvPeriodicSeq& y)
{
  if (x.period.empty() || y.period.empty())
    throw std::invalid_argument("eventually periodic sequence needs a nonempty period");
  // past both preperiods the pair of sequences is periodic with period lcm(|p_x|, |p_y|)
  const Index start = std::max(x.preperiod.size(), y.preperiod.size());
  const Index window = std::lcm(x.period.size(), y.period.size());
  for (Index n = start; n < start + window; ++n)
    if (x.at(n) != y.at(n))
      return false;
  return true;
}

std::vector<OrbitEntry> orbit_sample(const std::vector<Word>& generators, const Labeling& x,
                                     unsigned depth, unsigned budget)
{
  std::vector<Word> steps;
  for (const Word& g : generators) {
    if (g.rank() != x.rank())
      throw std::invalid_argument("orbit_sample: generator rank mismatch");
    steps.push_back(g);
    steps.push_back(g.inverse());
  }

  std::vector<Word> elements{Word(x.rank())};
  std::set<Word> seen{Word(x.rank())};
  std::size_t frontier_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t frontier_end = elements.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i)
      for (const Word& s : steps) {
        Word next = elements[i] * s;
        if (seen.insert(next).second)
          elements.push_back(std::move(next));
      }
    frontier_begin = frontier_end;
  }

  std::vector<OrbitEntry> out;
  out.reserve(elements.size());
  for (const Word& g : elements) {
    OrbitEntry entry{g, shift(g, x), out.size(), false};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].representative != i)
        continue;
      const Verdict v = equal_points(entry.point, out[i].point, budget);
      if (v.is_equal()) {
        entry.representative = i;
        break;
      }
      if (v.is_unknown())
        entry.unresolved = true;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace shiftred
