#include "shiftred/encoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shiftred {

Index pair(Index n, Index m)
{
  Index s, t, r;
  if (__builtin_add_overflow(n, m, &s) || __builtin_add_overflow(s, Index{1}, &t))
    throw std::overflow_error("pair: argument too large");
  // one of s, s+1 is even
  Index half_product;
  if (s % 2 == 0) {
    if (__builtin_mul_overflow(s / 2, t, &half_product))
      throw std::overflow_error("pair: result exceeds 64 bits");
  } else if (__builtin_mul_overflow(s, t / 2, &half_product)) {
    throw std::overflow_error("pair: result exceeds 64 bits");
  }
  if (__builtin_add_overflow(half_product, n, &r))
    throw std::overflow_error("pair: result exceeds 64 bits");
  return r;
}

std::pair<Index, Index> unpair(Index k)
{
  // largest s with s(s+1)/2 <= k
  auto s = static_cast<Index>((std::sqrt(8.0L * static_cast<long double>(k) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](Index v) { return static_cast<unsigned __int128>(v) * (v + 1) / 2; };
  while (tri(s) > k)
    --s;
  while (tri(s + 1) <= k)
    ++s;
  const Index n = k - static_cast<Index>(tri(s));
  return {n, s - n};
}

Natural pair(const Natural& n, const Natural& m)
{
  if (n < 0 || m < 0)
    throw std::invalid_argument("pair: negative argument");
  Natural s = n + m;
  return s * (s + 1) / 2 + n;
}

std::pair<Natural, Natural> unpair(const Natural& k)
{
  if (k < 0)
    throw std::invalid_argument("unpair: negative argument");
  Natural s = (boost::multiprecision::sqrt(Natural(8 * k + 1)) - 1) / 2;
  Natural n = k - s * (s + 1) / 2;
  return {n, s - n};
}

Index right_regular(Index a, Index n)
{
  return index_of_word(word_of_index(2, n) * word_of_index(2, a));
}

Index pi_apply(Index a, Index k)
{
  const auto [n, m] = unpair(k);
  return pair(right_regular(a, n), m);
}

Index pi_compose_index(Index a, Index b)
{
  return index_of_word(word_of_index(2, a) * word_of_index(2, b));
}

Natural pattern_code(unsigned radius, std::span<const Symbol> digits)
{
  const Index expected = ball_size(3, radius);
  if (digits.size() != expected)
    throw std::invalid_argument("pattern_code: expected " + std::to_string(expected) +
                                " digits for radius " + std::to_string(radius) + ", got " +
                                std::to_string(digits.size()));
  Natural value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= kPatternAlphabet)
      throw std::invalid_argument("pattern_code: digit " + std::to_string(digits[i]) +
                                  " out of range 0..8");
    value = value * kPatternAlphabet + digits[i];
  }
  return pair(Natural(radius), value);
}

Natural pattern_radius(const Natural& value) { return unpair(value).first; }

PatternCode pattern_decode(const Natural& value)
{
  auto [radius, packed] = unpair(value);
  if (radius > 10)
    throw std::invalid_argument("pattern_decode: radius too large to expand");
  const auto r = static_cast<unsigned>(radius);
  const Index size = ball_size(3, r);
  PatternCode out{r, {}};
  out.digits.reserve(size);
  for (Index i = 0; i < size; ++i) {
    out.digits.push_back(static_cast<Symbol>(packed % kPatternAlphabet));
    packed /= kPatternAlphabet;
  }
  if (packed != 0)
    throw std::invalid_argument("pattern_decode: value is not a pattern code");
  return out;
}

unsigned code6(unsigned bit, unsigned t)
{
  if (bit > 1 || t > 2)
    throw std::invalid_argument("code6: arguments out of range");
  return 3 * bit + t;
}

std::pair<unsigned, unsigned> decode6(unsigned v)
{
  if (v > 5)
    throw std::invalid_argument("decode6: value out of range");
  return {v / 3, v % 3};
}

}  // namespace shiftred
