#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sources.hpp"

namespace shiftred {

namespace {

// f_w evaluations are costly; literal scans of f_w images stop earlier than the default.
constexpr std::size_t kFwLiteralCap = 20'000;

unsigned parity(long v) { return static_cast<unsigned>(((v % 2) + 2) % 2); }

void check_fw_input(const Word& w, const Labeling& x)
{
  if (w.rank() != 2)
    throw std::invalid_argument("f_w: w must be a word of F_2");
  if (w.is_identity())
    throw std::invalid_argument("f_w: w must not be the identity");
  if (x.rank() != 2 || x.alphabet() != 2)
    throw std::invalid_argument("f_w: input must be a point of 2^{F_2}");
  if (!x.is_decidable())
    throw std::invalid_argument("f_w: input must be a fin-support or quotient point");
}

// w^j for j in [-bound, bound], stored at index j + bound.
std::vector<Word> powers(const Word& w, long bound)
{
  std::vector<Word> out(static_cast<std::size_t>(2 * bound + 1), Word(w.rank()));
  const Word w_inv = w.inverse();
  for (long j = 1; j <= bound; ++j) {
    out[static_cast<std::size_t>(bound + j)] = out[static_cast<std::size_t>(bound + j - 1)] * w;
    out[static_cast<std::size_t>(bound - j)] =
      out[static_cast<std::size_t>(bound - j + 1)] * w_inv;
  }
  return out;
}

SublemmaCase fin_support_case(const Word& w, const FinSupport& view)
{
  // Off the support the view is constant, so p_j differs from the constant pattern exactly
  // when w^j B(1,n) meets the support.
  long longest = 0;
  for (const auto& [s, sym] : view.values)
    longest = std::max(longest, static_cast<long>(s.length()));

  // |w^-j s| >= |j| - |s|, so the minimum over j is attained with |j| <= 2|s|.
  const std::vector<Word> reach = powers(w, 2 * longest + 1);
  const long reach_bound = 2 * longest + 1;
  auto w_pow = [&](long j) -> const Word& {
    return reach[static_cast<std::size_t>(j + reach_bound)];
  };

  std::size_t radius = std::numeric_limits<std::size_t>::max();
  for (const auto& [s, sym] : view.values)
    for (long j = -reach_bound; j <= reach_bound; ++j)
      radius = std::min(radius, (w_pow(-j) * s).length());

  // J = { j : some |h| <= n has w^j h in the support }; |j| <= n + longest.
  const long j_bound = static_cast<long>(radius) + longest;
  const std::vector<Word> line = powers(w, j_bound);
  auto line_pow = [&](long j) -> const Word& {
    return line[static_cast<std::size_t>(j + j_bound)];
  };
  std::vector<long> hits;
  for (long j = -j_bound; j <= j_bound; ++j) {
    const Word back = line_pow(-j);
    for (const auto& [s, sym] : view.values)
      if ((back * s).length() <= radius) {
        hits.push_back(j);
        break;
      }
  }

  // A pattern is stored as its entries off the background, keyed by ball position; the
  // position of h in B(1,n) is its enumeration index.
  std::vector<std::vector<std::pair<Index, Symbol>>> patterns;
  patterns.reserve(hits.size());
  for (long j : hits) {
    const Word back = line_pow(-j);
    std::vector<std::pair<Index, Symbol>> p;
    for (const auto& [s, sym] : view.values) {
      const Word h = back * s;
      if (h.length() <= radius)
        p.emplace_back(index_of_word(h), sym);
    }
    std::sort(p.begin(), p.end());
    patterns.push_back(std::move(p));
  }

  // lexicographic comparison of the dense patterns
  const Symbol bg = view.background;
  auto less = [bg](const auto& a, const auto& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      Index pos;
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
        pos = ia->first;
      else
        pos = ib->first;
      const Symbol va = ia != a.end() && ia->first == pos ? (ia++)->second : bg;
      const Symbol vb = ib != b.end() && ib->first == pos ? (ib++)->second : bg;
      if (va != vb)
        return va < vb;
    }
    return false;
  };
  const std::vector<std::pair<Index, Symbol>> constant;
  const auto least = std::min_element(patterns.begin(), patterns.end(), less);

  SublemmaCase out{};
  out.radius = static_cast<unsigned>(radius);
  if (less(constant, *least)) {
    // Z is cofinite; its complement is the finite nonempty set of hits.
    out.branch = SublemmaBranch::complement_largest;
    out.anchor = hits.back();
  } else {
    long largest = std::numeric_limits<long>::min();
    for (std::size_t i = 0; i < hits.size(); ++i)
      if (patterns[i] == *least)
        largest = hits[i];
    out.branch = SublemmaBranch::z_largest;
    out.anchor = largest;
  }
  out.t = parity(out.anchor);
  return out;
}

SublemmaCase quotient_case(const Word& w, const QuotientPeriodic& view)
{
  const FiniteGroup& group = *view.group;
  const unsigned omega = view.image_of(w);
  const unsigned period = group.element_order(omega);

  auto orbit_constant = [&](unsigned q) {
    unsigned p = q;
    for (unsigned i = 1; i < period; ++i) {
      p = group.mul(omega, p);
      if (view.labels[p] != view.labels[q])
        return false;
    }
    return true;
  };

  // n = least depth at which the walk reaches a state whose w-orbit is not constant
  std::vector<int> depth(group.order(), -1);
  std::deque<unsigned> queue{0};
  depth[0] = 0;
  int radius = -1;
  while (!queue.empty()) {
    const unsigned q = queue.front();
    queue.pop_front();
    if (!orbit_constant(q)) {
      radius = depth[q];
      break;
    }
    for (int l = 0; l < 4; ++l) {
      unsigned s = view.images[static_cast<std::size_t>(l / 2)];
      if (l % 2 == 1)
        s = group.inverse(s);
      const unsigned next = group.mul(q, s);
      if (depth[next] < 0) {
        depth[next] = depth[q] + 1;
        queue.push_back(next);
      }
    }
  }
  if (radius < 0)
    throw std::logic_error("quotient point is w-invariant but compared unequal");

  const auto& ball = cached_words_up_to(2, static_cast<unsigned>(radius));
  std::vector<unsigned> states;
  states.reserve(ball.size());
  for (const Word& h : ball)
    states.push_back(view.image_of(h));

  std::vector<std::vector<Symbol>> patterns(period);
  unsigned omega_j = 0;
  for (unsigned j = 0; j < period; ++j) {
    patterns[j].reserve(states.size());
    for (unsigned q : states)
      patterns[j].push_back(view.labels[group.mul(omega_j, q)]);
    omega_j = group.mul(omega, omega_j);
  }
  const auto least = *std::min_element(patterns.begin(), patterns.end());
  auto in_z = [&](long j) {
    return patterns[static_cast<std::size_t>(((j % period) + period) % period)] == least;
  };
  auto in_z_prime = [&](long j) { return in_z(j) && !in_z(j + 1); };

  // Z is periodic, nonempty and not everything: unbounded both ways, as is its complement.
  SublemmaCase out{SublemmaBranch::alternating, static_cast<unsigned>(radius), 0, 0};
  if (in_z_prime(0))
    return out;
  for (long j = 1; j <= static_cast<long>(period); ++j)
    if (in_z_prime(j)) {
      out.anchor = j;
      out.t = j % 2 == 1 ? 1 : 2;
      return out;
    }
  throw std::logic_error("Z' has no positive element within one period");
}

}  // namespace

std::string to_string(SublemmaBranch b)
{
  switch (b) {
    case SublemmaBranch::invariant:
      return "invariant";
    case SublemmaBranch::z_largest:
      return "z-largest";
    case SublemmaBranch::z_least:
      return "z-least";
    case SublemmaBranch::complement_largest:
      return "complement-largest";
    case SublemmaBranch::complement_least:
      return "complement-least";
    case SublemmaBranch::alternating:
      return "alternating";
  }
  return "?";
}

SublemmaCase sublemma_case(const Word& w, const Labeling& view)
{
  check_fw_input(w, view);
  if (equal_points(view, shift(w.inverse(), view), 0).is_equal())
    return {SublemmaBranch::invariant, 0, 0, 0};
  if (const auto* fs = view.as_fin_support())
    return fin_support_case(w, *fs);
  return quotient_case(w, *view.as_quotient());
}

Labeling fw(const Word& w, const Labeling& x)
{
  check_fw_input(w, x);
  return Labeling::derived(std::make_shared<detail::FwSource>(w, x));
}

namespace detail {

Symbol fw_value(const Word& w, const Labeling& x, const Word& g)
{
  const Labeling view = root_view(x, g);
  return code6(view.eval(Word(2)), sublemma_case(w, view).t);
}

FwSource::FwSource(Word w, Labeling x) : w_(std::move(w)), x_(std::move(x)) {}

std::string FwSource::provenance() const
{
  return "fw[w=" + w_.str() + "](" + x_.describe() + ")";
}

// The value at h of offset.f_w(x) depends only on (offset.x) viewed from h, and its first
// component is (offset.x)(h).
std::optional<Verdict> FwSource::compare(const Word& offset, const DerivedSource& other,
                                         const Word& other_offset,
                                         std::optional<unsigned> radius) const
{
  const auto& that = static_cast<const FwSource&>(other);
  if (that.w_ != w_)
    return std::nullopt;
  const Labeling mine = shift(offset, x_);
  const Labeling theirs = shift(other_offset, that.x_);
  const Verdict whole = equal_points(mine, theirs, 0);
  if (whole.is_equal())
    return whole;
  if (!radius)
    return whole.is_distinct() ? std::optional<Verdict>(whole) : std::nullopt;
  const Verdict near = equal_on_ball(mine, theirs, *radius);
  if (near.is_distinct())
    return near;
  return compare_sources_literal(*this, offset, other, other_offset, *radius, kFwLiteralCap);
}

Verdict compare_sources_literal(const DerivedSource& a, const Word& offset,
                                const DerivedSource& b, const Word& other_offset,
                                unsigned radius, std::size_t cap)
{
  const Word inv_a = offset.inverse();
  const Word inv_b = other_offset.inverse();
  std::optional<Word> witness;
  std::size_t spent = 0;
  const bool complete = for_each_word(a.rank(), radius, [&](const Word& h) {
    if (spent++ >= cap)
      return false;
    if (a.eval(inv_a * h) != b.eval(inv_b * h)) {
      witness = h;
      return false;
    }
    return true;
  });
  if (witness)
    return Verdict::distinct(*witness);
  return complete ? Verdict::equal() : Verdict::unknown(radius);
}

}  // namespace detail

}  // namespace shiftred
