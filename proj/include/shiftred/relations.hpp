#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shiftred/labelings.hpp"

namespace shiftred {

/// Eventually periodic sequence: preperiod, then period repeated forever.
struct EvPeriodicSeq
{
  std::vector<Symbol> preperiod;
  std::vector<Symbol> period;  // nonempty

  Symbol at(Index n) const;
};

/// x E_0 y: the sequences agree from some index on.
bool e0_equiv(const EvPeriodicSeq& x, const EvPeriodicSeq& y);

enum class Truth { no, yes, unknown };

inline Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

/// Orbit-relation verdict from a point comparison.
inline Truth truth(const Verdict& v)
{
  if (v.is_equal())
    return Truth::yes;
  return v.is_distinct() ? Truth::no : Truth::unknown;
}

/// (x,y) (E x F) (x',y') iff x E x' and y F y'. `first` and `second` return bool or Truth.
template<typename A, typename B, typename RelA, typename RelB>
Truth product_equiv(RelA&& first, RelB&& second, const std::pair<A, B>& lhs,
                    const std::pair<A, B>& rhs)
{
  const Truth a = truth(first(lhs.first, rhs.first));
  const Truth b = truth(second(lhs.second, rhs.second));
  if (a == Truth::no || b == Truth::no)
    return Truth::no;
  if (a == Truth::unknown || b == Truth::unknown)
    return Truth::unknown;
  return Truth::yes;
}

struct OrbitEntry
{
  Word g;
  Labeling point;              // g.x
  std::size_t representative;  // first entry whose point equals this one (possibly itself)
  bool unresolved;             // some earlier comparison came back Unknown
};

/// g.x for every g in the ball of radius `depth` over `generators` and their inverses,
/// breadth-first, with equal points grouped through equal_points.
std::vector<OrbitEntry> orbit_sample(const std::vector<Word>& generators, const Labeling& x,
                                     unsigned depth, unsigned budget = 6);

}  // namespace shiftred
