#pragma once

#include <optional>
#include <set>
#include <vector>

#include "shiftred/labelings.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/relations.hpp"

/// Brute-force reference computations used by the property suites. Nothing here calls the
/// enumeration, ball, pairing or case-analysis code it is meant to check.
namespace shiftred::oracle {

/// Reduced words of length <= radius, by filtering every letter string in lexicographic
/// order of length, then letters.
std::vector<std::vector<Letter>> reduced_strings(int rank, unsigned radius);

/// {center * h : h any letter string of length <= radius}.
std::set<Word> ball_set(const Word& center, unsigned radius);

/// Closed form 1 + 2k((2k-1)^m - 1)/(2k-2), evaluated in floating point and rounded.
Index ball_size_formula(int rank, unsigned radius);

/// Cantor pairing by walking the diagonals.
Index pair_by_walk(Index n, Index m);

struct ScanResult
{
  bool invariant;  // no difference along the w-line up to the radius limit
  unsigned radius;
  SublemmaBranch branch;
  long anchor;
  unsigned t;
};

/// Case analysis of f_w at g by evaluating p_j(h) = x(g w^j h) for j in [-window, window].
/// Z (or its complement) is taken as bounded above when it misses the top `margin` indices
/// of the window, and likewise below.
ScanResult sublemma_scan(const Word& w, const Labeling& x, const Word& g, long window,
                         long margin, unsigned max_radius);

/// E_0 by comparing the second half of the first 4(max preperiod + lcm) symbols.
bool e0_by_tail(const EvPeriodicSeq& x, const EvPeriodicSeq& y);

}  // namespace shiftred::oracle
