#include "sampling.hpp"

#include <vector>

namespace shiftred::detail {

Word random_word(Rng& rng, int rank, unsigned max_length)
{
  const auto length = static_cast<std::size_t>(rng.below(max_length + 1));
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const auto l = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(2 * rank)));
    if (letters.empty() || l != inverse_letter(letters.back()))
      letters.push_back(l);
  }
  return Word::reduce(rank, letters);
}

Labeling random_fin_support(Rng& rng, int rank, unsigned alphabet, unsigned key_radius,
                            unsigned max_keys)
{
  const auto background = static_cast<Symbol>(rng.below(alphabet));
  const auto keys = rng.below(max_keys + 1);
  std::map<Word, Symbol> values;
  for (std::uint64_t i = 0; i < keys; ++i) {
    auto sym = static_cast<Symbol>(rng.below(alphabet - 1));
    if (sym >= background)
      ++sym;
    values[random_word(rng, rank, key_radius)] = sym;
  }
  return Labeling::fin_support(rank, alphabet, background, std::move(values));
}

std::shared_ptr<const FiniteGroup> random_group(Rng& rng, unsigned max_order)
{
  std::vector<FiniteGroup> choices;
  for (unsigned n = 1; n <= 6 && n <= max_order; ++n)
    choices.push_back(FiniteGroup::cyclic(n));
  if (max_order >= 4)
    choices.push_back(FiniteGroup::klein_four());
  if (max_order >= 6)
    choices.push_back(FiniteGroup::symmetric3());
  return std::make_shared<const FiniteGroup>(choices[rng.below(choices.size())]);
}

Labeling random_quotient(Rng& rng, int rank, unsigned alphabet, unsigned max_order)
{
  auto group = random_group(rng, max_order);
  std::vector<unsigned> images;
  for (int i = 0; i < rank; ++i)
    images.push_back(static_cast<unsigned>(rng.below(group->order())));
  std::vector<Symbol> labels;
  for (unsigned q = 0; q < group->order(); ++q)
    labels.push_back(static_cast<Symbol>(rng.below(alphabet)));
  return Labeling::quotient(rank, alphabet, std::move(group), std::move(images),
                            std::move(labels));
}

Labeling random_decidable(Rng& rng, int rank, unsigned alphabet)
{
  if (rng.coin())
    return random_fin_support(rng, rank, alphabet, 3, 4);
  return random_quotient(rng, rank, alphabet, 6);
}

}  // namespace shiftred::detail
