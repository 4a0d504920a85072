#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace shiftred {

/// A letter packs a generator index and an inversion flag as 2*generator + inverted.
/// The numeric order of letters, a < A < b < B < c < C, is the enumeration order.
using Letter = std::uint8_t;

constexpr Letter make_letter(int generator, bool inverted)
{
  return static_cast<Letter>(2 * generator + (inverted ? 1 : 0));
}
constexpr Letter inverse_letter(Letter l) { return static_cast<Letter>(l ^ 1u); }
constexpr int generator_of(Letter l) { return l >> 1; }
constexpr bool is_inverted(Letter l) { return (l & 1u) != 0; }

/// Position in the length-first, lexicographic enumeration g_0, g_1, ... of F_k.
using Index = std::uint64_t;

/// Reduced word in the free group of rank 2 or 3.
class Word
{
public:
  Word() = default;
  explicit Word(int rank);

  /// Freely reduces `raw`. Throws std::invalid_argument on a letter outside the rank.
  static Word reduce(int rank, std::span<const Letter> raw);

  /// Text syntax over a/A/b/B/c/C, "1" for the identity. Input is freely reduced.
  static Word parse(int rank, std::string_view text);

  static Word generator(int rank, int gen, bool inverted = false);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;

  /// Same letters viewed in F_rank. Throws if a letter does not exist there.
  Word with_rank(int rank) const;

  /// True when every letter is a generator of F_rank (e.g. the word lies in F_2 < F_3).
  bool lies_in(int rank) const;

  std::string str() const;

  friend Word operator*(const Word& x, const Word& y);
  Word& operator*=(const Word& y);

  friend bool operator==(const Word& x, const Word& y) = default;

  /// Rank first, then the enumeration order (shortlex).
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

private:
  Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 2;
  std::vector<Letter> letters_;
};

/// w^e for any integer exponent.
Word power(const Word& w, long exponent);

void check_rank(int rank);
void check_same_rank(const Word& x, const Word& y);

/// Number of reduced words of length exactly `length`.
Index sphere_size(int rank, unsigned length);

/// 1 + 2k((2k-1)^m - 1)/(2k-2): the size of any ball of radius m.
Index ball_size(int rank, unsigned radius);

Word word_of_index(int rank, Index n);

/// Throws std::overflow_error when the index does not fit in 64 bits.
Index index_of_word(const Word& w);

/// All reduced words of length <= radius, in enumeration order.
std::vector<Word> words_up_to(int rank, unsigned radius);

/// Memoized words_up_to; the returned reference stays valid for the program lifetime.
const std::vector<Word>& cached_words_up_to(int rank, unsigned radius);

/// Visits words in enumeration order with length <= radius until `visit` returns false.
/// Returns false iff stopped early.
bool for_each_word(int rank, unsigned radius, const std::function<bool(const Word&)>& visit);

struct Ball
{
  int rank;
  Word center;
  unsigned radius;
  std::vector<Word> elements;  // center * h, in enumeration order of h
};

Ball ball(const Word& center, unsigned radius);
Ball ball(int rank, unsigned radius);

enum class Sign { plus, minus };

struct InF2
{
  friend bool operator==(InF2, InF2) = default;
};

/// g = head * c^(±power) * tail with head in F_2 and tail not starting with c^(±1).
struct PrefixBlock
{
  Word head;  // rank 2
  Sign sign;
  unsigned power;
  Word tail;  // rank 3
  friend bool operator==(const PrefixBlock&, const PrefixBlock&) = default;
};

std::variant<InF2, PrefixBlock> decompose_prefix_block(const Word& g);

/// h = prefix * c^(±1) * suffix with suffix the maximal F_2 tail.
struct SuffixSplit
{
  Word prefix;  // rank 3
  Sign sign;
  Word suffix;  // rank 2
  friend bool operator==(const SuffixSplit&, const SuffixSplit&) = default;
};

std::variant<InF2, SuffixSplit> decompose_suffix_f2(const Word& h);

struct WordHash
{
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace shiftred
