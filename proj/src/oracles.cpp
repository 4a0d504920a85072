#include "shiftred/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace shiftred::oracle {

namespace {

// Every string over 2k letters of length exactly `len`, in lexicographic order.
template<typename Visit>
void for_each_string(int rank, unsigned len, Visit&& visit)
{
  const auto letters = static_cast<Letter>(2 * rank);
  std::vector<Letter> s(len, 0);
  while (true) {
    visit(s);
    std::size_t pos = len;
    while (pos > 0 && s[pos - 1] + 1 == letters)
      s[--pos] = 0;
    if (pos == 0)
      return;
    ++s[pos - 1];
  }
}

bool is_reduced(const std::vector<Letter>& s)
{
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] ^ 1u) == s[i - 1])
      return false;
  return true;
}

}  // namespace

std::vector<std::vector<Letter>> reduced_strings(int rank, unsigned radius)
{
  std::vector<std::vector<Letter>> out;
  for (unsigned len = 0; len <= radius; ++len)
    for_each_string(rank, len, [&](const std::vector<Letter>& s) {
      if (is_reduced(s))
        out.push_back(s);
    });
  return out;
}

std::set<Word> ball_set(const Word& center, unsigned radius)
{
  std::set<Word> seen;
  for (unsigned len = 0; len <= radius; ++len)
    for_each_string(center.rank(), len, [&](const std::vector<Letter>& s) {
      seen.insert(center * Word::reduce(center.rank(), s));
    });
  return seen;
}

Index ball_size_formula(int rank, unsigned radius)
{
  const double k = rank;
  const double v = 1 + 2 * k * (std::pow(2 * k - 1, radius) - 1) / (2 * k - 2);
  return static_cast<Index>(std::llround(v));
}

Index pair_by_walk(Index n, Index m)
{
  // diagonal d = n + m holds d + 1 pairs, listed (0,d), (1,d-1), ..., (d,0)
  Index before = 0;
  for (Index d = 0; d < n + m; ++d)
    before += d + 1;
  return before + n;
}

ScanResult sublemma_scan(const Word& w, const Labeling& x, const Word& g, long window,
                         long margin, unsigned max_radius)
{
  std::vector<Word> line;  // g w^j at index j + window
  for (long j = -window; j <= window; ++j)
    line.push_back(g * power(w, j));
  auto at = [&](long j, const Word& h) {
    return x.eval(line[static_cast<std::size_t>(j + window)] * h);
  };

  // words are generated one length at a time until some h sees a change along the line
  std::vector<Word> words;
  std::optional<unsigned> radius;
  for (unsigned len = 0; len <= max_radius && !radius; ++len)
    for_each_string(2, len, [&](const std::vector<Letter>& s) {
      if (!is_reduced(s))
        return;
      words.push_back(Word::reduce(2, s));
      const Symbol base = at(0, words.back());
      for (long j = -window; j <= window && !radius; ++j)
        if (at(j, words.back()) != base)
          radius = len;
    });
  if (!radius)
    return {true, 0, SublemmaBranch::invariant, 0, 0};

  std::vector<std::vector<Symbol>> patterns;
  for (long j = -window; j <= window; ++j) {
    std::vector<Symbol> p;
    for (const Word& h : words)
      if (h.length() <= *radius)
        p.push_back(at(j, h));
    patterns.push_back(std::move(p));
  }
  const auto least = *std::min_element(patterns.begin(), patterns.end());

  std::vector<long> z, rest;
  for (long j = -window; j <= window; ++j)
    (patterns[static_cast<std::size_t>(j + window)] == least ? z : rest).push_back(j);

  auto bounded_above = [&](const std::vector<long>& s) {
    return !s.empty() && s.back() <= window - margin;
  };
  auto bounded_below = [&](const std::vector<long>& s) {
    return !s.empty() && s.front() >= -window + margin;
  };
  auto result = [&](SublemmaBranch b, long anchor) {
    return ScanResult{false, *radius, b, anchor, static_cast<unsigned>(std::abs(anchor) % 2)};
  };

  if (bounded_above(z))
    return result(SublemmaBranch::z_largest, z.back());
  if (bounded_below(z))
    return result(SublemmaBranch::z_least, z.front());
  if (bounded_above(rest))
    return result(SublemmaBranch::complement_largest, rest.back());
  if (bounded_below(rest))
    return result(SublemmaBranch::complement_least, rest.front());

  auto in_z = [&](long j) { return std::binary_search(z.begin(), z.end(), j); };
  if (in_z(0) && !in_z(1))
    return ScanResult{false, *radius, SublemmaBranch::alternating, 0, 0};
  for (long j = 1; j < window; ++j)
    if (in_z(j) && !in_z(j + 1))
      return ScanResult{false, *radius, SublemmaBranch::alternating, j, j % 2 == 1 ? 1u : 2u};
  return ScanResult{false, *radius, SublemmaBranch::alternating, -1, 0};
}

bool e0_by_tail(const EvPeriodicSeq& x, const EvPeriodicSeq& y)
{
  // unroll both sequences rather than indexing through EvPeriodicSeq::at
  auto unroll = [](const EvPeriodicSeq& s, Index len) {
    std::vector<Symbol> out(s.preperiod.begin(), s.preperiod.end());
    while (out.size() < len)
      out.insert(out.end(), s.period.begin(), s.period.end());
    return out;
  };
  const Index pre = std::max(x.preperiod.size(), y.preperiod.size());
  const Index n = 4 * (pre + std::lcm(x.period.size(), y.period.size()));
  const auto xs = unroll(x, n);
  const auto ys = unroll(y, n);
  return std::equal(xs.begin() + static_cast<long>(n / 2), xs.begin() + static_cast<long>(n),
                    ys.begin() + static_cast<long>(n / 2));
}

}  // namespace shiftred::oracle
