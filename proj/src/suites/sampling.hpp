#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "shiftred/labelings.hpp"

namespace shiftred::detail {

/// mt19937_64 seeded with seed ^ (salt * golden ratio); draws are reduced by modulo so the
/// streams do not depend on the standard library's distribution implementations.
class Rng
{
public:
  Rng(std::uint64_t seed, std::uint64_t salt) : engine_(seed ^ (salt * 0x9E3779B97F4A7C15ull)) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return (engine_() & 1u) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Reduced word with length uniform in [0, max_length].
Word random_word(Rng& rng, int rank, unsigned max_length);

/// Rank-2/3 point with 0..max_keys non-background keys of length <= key_radius.
Labeling random_fin_support(Rng& rng, int rank, unsigned alphabet, unsigned key_radius,
                            unsigned max_keys);

/// One of the cyclic groups of order 1..6, the Klein four group or S_3, restricted to
/// orders <= max_order.
std::shared_ptr<const FiniteGroup> random_group(Rng& rng, unsigned max_order);

Labeling random_quotient(Rng& rng, int rank, unsigned alphabet, unsigned max_order);

/// Either kind, evenly.
Labeling random_decidable(Rng& rng, int rank, unsigned alphabet);

}  // namespace shiftred::detail
