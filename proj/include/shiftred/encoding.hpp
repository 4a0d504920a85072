#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shiftred/freegroup.hpp"

namespace shiftred {

using Natural = boost::multiprecision::cpp_int;
using Symbol = std::uint32_t;

/// Cantor pairing <n,m> = (n+m)(n+m+1)/2 + n. Throws std::overflow_error past 64 bits.
Index pair(Index n, Index m);
std::pair<Index, Index> unpair(Index k);

Natural pair(const Natural& n, const Natural& m);
std::pair<Natural, Natural> unpair(const Natural& k);

/// Right regular representation of F_2 on indices: g_{rra(a,n)} = g_n g_a.
Index right_regular(Index a, Index n);

/// pi_a(<n,m>) = <rra(a,n), m>.
Index pi_apply(Index a, Index k);

/// Index of g_a g_b; pi_b(pi_a(k)) == pi_{pi_compose_index(a,b)}(k).
Index pi_compose_index(Index a, Index b);

constexpr unsigned kPatternAlphabet = 9;

/// Injective code of a 9-ary pattern on B_3(1, radius): <radius, sum digit_i 9^i> with digits
/// in ball order. Throws std::invalid_argument on a wrong digit count or a digit >= 9.
Natural pattern_code(unsigned radius, std::span<const Symbol> digits);

struct PatternCode
{
  unsigned radius;
  std::vector<Symbol> digits;
  friend bool operator==(const PatternCode&, const PatternCode&) = default;
};

/// Inverse of pattern_code. Throws std::invalid_argument when `value` is not a code.
PatternCode pattern_decode(const Natural& value);

/// Radius encoded by a pattern code, without expanding the digits.
Natural pattern_radius(const Natural& value);

/// Bijection 2 x 3 -> 6, v = 3*bit + t.
unsigned code6(unsigned bit, unsigned t);
std::pair<unsigned, unsigned> decode6(unsigned v);

}  // namespace shiftred
