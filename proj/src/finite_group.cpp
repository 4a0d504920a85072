#include <stdexcept>
#include <string>

#include "shiftred/labelings.hpp"

namespace shiftred {

FiniteGroup::FiniteGroup(unsigned order, std::vector<unsigned> table)
: order_(order), table_(std::move(table)), inverse_(order)
{
  for (unsigned p = 0; p < order_; ++p)
    for (unsigned q = 0; q < order_; ++q)
      if (mul(p, q) == 0)
        inverse_[p] = q;
}

FiniteGroup FiniteGroup::cyclic(unsigned order)
{
  if (order == 0)
    throw std::invalid_argument("cyclic group of order 0");
  std::vector<unsigned> table(order * order);
  for (unsigned p = 0; p < order; ++p)
    for (unsigned q = 0; q < order; ++q)
      table[p * order + q] = (p + q) % order;
  return FiniteGroup(order, std::move(table));
}

FiniteGroup FiniteGroup::klein_four()
{
  std::vector<unsigned> table(16);
  for (unsigned p = 0; p < 4; ++p)
    for (unsigned q = 0; q < 4; ++q)
      table[p * 4 + q] = p ^ q;
  return FiniteGroup(4, std::move(table));
}

FiniteGroup FiniteGroup::symmetric3()
{
  // elements as permutations of {0,1,2}; index 0 is the identity
  const std::vector<std::vector<unsigned>> perms = {
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::vector<unsigned>& p) {
    for (unsigned i = 0; i < perms.size(); ++i)
      if (perms[i] == p)
        return i;
    throw std::logic_error("not a permutation");
  };
  std::vector<unsigned> table(36);
  for (unsigned p = 0; p < 6; ++p)
    for (unsigned q = 0; q < 6; ++q) {
      // (p*q)(i) = p(q(i))
      std::vector<unsigned> r(3);
      for (unsigned i = 0; i < 3; ++i)
        r[i] = perms[p][perms[q][i]];
      table[p * 6 + q] = index_of(r);
    }
  return FiniteGroup(6, std::move(table));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<unsigned>>& rows)
{
  const auto n = static_cast<unsigned>(rows.size());
  if (n == 0)
    throw std::invalid_argument("group table is empty");
  std::vector<unsigned> table;
  table.reserve(n * n);
  for (unsigned p = 0; p < n; ++p) {
    if (rows[p].size() != n)
      throw std::invalid_argument("group table row " + std::to_string(p) + " has " +
                                  std::to_string(rows[p].size()) + " entries, expected " +
                                  std::to_string(n));
    std::vector<bool> seen(n, false);
    for (unsigned q = 0; q < n; ++q) {
      const unsigned v = rows[p][q];
      if (v >= n)
        throw std::invalid_argument("group table entry out of range in row " + std::to_string(p));
      if (seen[v])
        throw std::invalid_argument("group table row " + std::to_string(p) +
                                    " repeats an element");
      seen[v] = true;
      table.push_back(v);
    }
  }
  for (unsigned q = 0; q < n; ++q) {
    std::vector<bool> seen(n, false);
    for (unsigned p = 0; p < n; ++p) {
      if (seen[table[p * n + q]])
        throw std::invalid_argument("group table column " + std::to_string(q) +
                                    " repeats an element");
      seen[table[p * n + q]] = true;
    }
  }
  for (unsigned p = 0; p < n; ++p)
    if (table[p] != p || table[p * n] != p)
      throw std::invalid_argument("element 0 must be the identity");
  for (unsigned p = 0; p < n; ++p)
    for (unsigned q = 0; q < n; ++q)
      for (unsigned r = 0; r < n; ++r)
        if (table[table[p * n + q] * n + r] != table[p * n + table[q * n + r]])
          throw std::invalid_argument("group table is not associative");
  return FiniteGroup(n, std::move(table));
}

unsigned FiniteGroup::element_order(unsigned q) const
{
  unsigned k = 1;
  for (unsigned acc = q; acc != 0; acc = mul(acc, q))
    ++k;
  return k;
}

}  // namespace shiftred
