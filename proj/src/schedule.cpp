#include "shiftred/reductions.hpp"

namespace shiftred {

Index Schedule::n(Index, Index j) const { return j + 1; }

Index Schedule::m(Index i, Index j) const { return pair(i, j) + 1; }

Word Schedule::w(Index i, Index j) const
{
  return word_of_index(2, n(i, j)) * word_of_index(2, n(i, j + 1)).inverse();
}

std::optional<std::pair<Index, Index>> Schedule::lookup(Index m_value) const
{
  if (m_value == 0)
    return std::nullopt;
  return unpair(m_value - 1);
}

}  // namespace shiftred
