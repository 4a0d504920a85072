#include "shiftred/freegroup.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace shiftred {

namespace {

constexpr char kLetterChars[] = {'a', 'A', 'b', 'B', 'c', 'C'};

int letter_count(int rank) { return 2 * rank; }

void check_letter(int rank, Letter l)
{
  if (l >= letter_count(rank))
    throw std::invalid_argument("letter index " + std::to_string(l) + " invalid for rank " +
                                std::to_string(rank));
}

Index checked_mul(Index a, Index b)
{
  Index r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("word index exceeds 64 bits");
  return r;
}

Index checked_add(Index a, Index b)
{
  Index r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("word index exceeds 64 bits");
  return r;
}

}  // namespace

void check_rank(int rank)
{
  if (rank != 2 && rank != 3)
    throw std::invalid_argument("rank must be 2 or 3, got " + std::to_string(rank));
}

void check_same_rank(const Word& x, const Word& y)
{
  if (x.rank() != y.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(x.rank()) + " vs " +
                                std::to_string(y.rank()));
}

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, std::span<const Letter> raw)
{
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(rank, l);
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(rank, std::move(out));
}

Word Word::parse(int rank, std::string_view text)
{
  check_rank(rank);
  if (text == "1")
    return Word(rank);
  if (text.empty())
    throw std::invalid_argument("empty word (write the identity as \"1\")");
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char ch : text) {
    int found = -1;
    for (int l = 0; l < 6; ++l)
      if (kLetterChars[l] == ch)
        found = l;
    if (found < 0)
      throw std::invalid_argument(std::string("invalid letter '") + ch + "' in word \"" +
                                  std::string(text) + "\"");
    if (found >= letter_count(rank))
      throw std::invalid_argument(std::string("letter '") + ch + "' does not exist in rank " +
                                  std::to_string(rank));
    raw.push_back(static_cast<Letter>(found));
  }
  return reduce(rank, raw);
}

Word Word::generator(int rank, int gen, bool inverted)
{
  check_rank(rank);
  Letter l = make_letter(gen, inverted);
  check_letter(rank, l);
  return Word(rank, {l});
}

Word Word::inverse() const
{
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out)
    l = inverse_letter(l);
  return Word(rank_, std::move(out));
}

Word Word::with_rank(int rank) const
{
  check_rank(rank);
  for (Letter l : letters_)
    check_letter(rank, l);
  return Word(rank, letters_);
}

bool Word::lies_in(int rank) const
{
  for (Letter l : letters_)
    if (l >= letter_count(rank))
      return false;
  return true;
}

std::string Word::str() const
{
  if (letters_.empty())
    return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_)
    s.push_back(kLetterChars[l]);
  return s;
}

Word operator*(const Word& x, const Word& y)
{
  check_same_rank(x, y);
  std::size_t cancel = 0;
  const std::size_t limit = std::min(x.length(), y.length());
  while (cancel < limit &&
         x.letters_[x.length() - 1 - cancel] == inverse_letter(y.letters_[cancel]))
    ++cancel;
  std::vector<Letter> out;
  out.reserve(x.length() + y.length() - 2 * cancel);
  out.insert(out.end(), x.letters_.begin(), x.letters_.end() - static_cast<long>(cancel));
  out.insert(out.end(), y.letters_.begin() + static_cast<long>(cancel), y.letters_.end());
  return Word(x.rank_, std::move(out));
}

Word& Word::operator*=(const Word& y)
{
  *this = *this * y;
  return *this;
}

std::strong_ordering operator<=>(const Word& x, const Word& y)
{
  if (auto c = x.rank_ <=> y.rank_; c != 0)
    return c;
  if (auto c = x.length() <=> y.length(); c != 0)
    return c;
  return x.letters_ <=> y.letters_;
}

Word power(const Word& w, long exponent)
{
  Word base = exponent < 0 ? w.inverse() : w;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Word result(w.rank());
  for (unsigned long i = 0; i < e; ++i)
    result *= base;
  return result;
}

Index sphere_size(int rank, unsigned length)
{
  check_rank(rank);
  if (length == 0)
    return 1;
  Index size = static_cast<Index>(letter_count(rank));
  for (unsigned i = 1; i < length; ++i)
    size = checked_mul(size, static_cast<Index>(letter_count(rank) - 1));
  return size;
}

Index ball_size(int rank, unsigned radius)
{
  check_rank(rank);
  const Index k2 = static_cast<Index>(letter_count(rank));
  Index power = 1;
  for (unsigned i = 0; i < radius; ++i)
    power = checked_mul(power, k2 - 1);
  return checked_add(1, checked_mul(k2, power - 1) / (k2 - 2));
}

Word word_of_index(int rank, Index n)
{
  check_rank(rank);
  unsigned length = 0;
  for (;;) {
    Index size = sphere_size(rank, length);
    if (n < size)
      break;
    n -= size;
    ++length;
  }
  if (length == 0)
    return Word(rank);

  const Index radix = static_cast<Index>(letter_count(rank) - 1);
  // place value of the first digit is radix^(length-1)
  Index place = 1;
  for (unsigned i = 1; i < length; ++i)
    place *= radix;

  std::vector<Letter> letters;
  letters.reserve(length);
  Index digit = n / place;
  n %= place;
  letters.push_back(static_cast<Letter>(digit));
  for (unsigned pos = 1; pos < length; ++pos) {
    place /= radix;
    digit = n / place;
    n %= place;
    Letter forbidden = inverse_letter(letters.back());
    Letter l = static_cast<Letter>(digit);
    if (l >= forbidden)
      ++l;
    letters.push_back(l);
  }
  return Word::reduce(rank, letters);
}

Index index_of_word(const Word& w)
{
  const int rank = w.rank();
  const unsigned length = static_cast<unsigned>(w.length());
  Index before = 0;
  for (unsigned l = 0; l < length; ++l)
    before = checked_add(before, sphere_size(rank, l));
  if (length == 0)
    return 0;

  const Index radix = static_cast<Index>(letter_count(rank) - 1);
  Index offset = w[0];
  for (unsigned pos = 1; pos < length; ++pos) {
    Letter forbidden = inverse_letter(w[pos - 1]);
    Index digit = w[pos] > forbidden ? w[pos] - 1u : w[pos];
    offset = checked_add(checked_mul(offset, radix), digit);
  }
  return checked_add(before, offset);
}

std::vector<Word> words_up_to(int rank, unsigned radius)
{
  check_rank(rank);
  std::vector<Word> out;
  out.reserve(ball_size(rank, radius));
  out.emplace_back(rank);
  std::size_t level_begin = 0;
  for (unsigned len = 1; len <= radius; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int l = 0; l < letter_count(rank); ++l) {
        if (!out[i].is_identity() && out[i].back() == inverse_letter(static_cast<Letter>(l)))
          continue;
        Word next = out[i] * Word::generator(rank, l / 2, l % 2 == 1);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

const std::vector<Word>& cached_words_up_to(int rank, unsigned radius)
{
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, std::unique_ptr<const std::vector<Word>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rank, radius}];
  if (!slot)
    slot = std::make_unique<const std::vector<Word>>(words_up_to(rank, radius));
  return *slot;
}

bool for_each_word(int rank, unsigned radius, const std::function<bool(const Word&)>& visit)
{
  check_rank(rank);
  const Index count = ball_size(rank, radius);
  for (Index n = 0; n < count; ++n)
    if (!visit(word_of_index(rank, n)))
      return false;
  return true;
}

Ball ball(const Word& center, unsigned radius)
{
  Ball b{center.rank(), center, radius, {}};
  const auto& offsets = cached_words_up_to(center.rank(), radius);
  b.elements.reserve(offsets.size());
  for (const Word& h : offsets)
    b.elements.push_back(center * h);
  return b;
}

Ball ball(int rank, unsigned radius) { return ball(Word(rank), radius); }

std::variant<InF2, PrefixBlock> decompose_prefix_block(const Word& g)
{
  if (g.rank() != 3)
    throw std::invalid_argument("decompose_prefix_block expects a word of F_3");
  const auto letters = g.letters();
  std::size_t i = 0;
  while (i < letters.size() && generator_of(letters[i]) != 2)
    ++i;
  if (i == letters.size())
    return InF2{};

  const Letter block = letters[i];
  std::size_t j = i;
  while (j < letters.size() && letters[j] == block)
    ++j;

  PrefixBlock out{
    Word::reduce(2, letters.subspan(0, i)),
    is_inverted(block) ? Sign::minus : Sign::plus,
    static_cast<unsigned>(j - i),
    Word::reduce(3, letters.subspan(j)),
  };
  return out;
}

std::variant<InF2, SuffixSplit> decompose_suffix_f2(const Word& h)
{
  if (h.rank() != 3)
    throw std::invalid_argument("decompose_suffix_f2 expects a word of F_3");
  const auto letters = h.letters();
  std::size_t i = letters.size();
  while (i > 0 && generator_of(letters[i - 1]) != 2)
    --i;
  if (i == 0)
    return InF2{};
  const Letter pivot = letters[i - 1];
  SuffixSplit out{
    Word::reduce(3, letters.subspan(0, i - 1)),
    is_inverted(pivot) ? Sign::minus : Sign::plus,
    Word::reduce(2, letters.subspan(i)),
  };
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ull;
  for (Letter l : w.letters())
    h = (h ^ l) * 0x100000001b3ull;
  return h;
}

}  // namespace shiftred
