#include <stdexcept>

#include "sources.hpp"

namespace shiftred {

namespace {

constexpr Symbol kBlockFiller = 2;
constexpr Symbol kSublemmaOffset = 3;

Word lift(const Word& h) { return h.with_rank(3); }

Word c_power(unsigned p)
{
  return power(Word::generator(3, 2), static_cast<long>(p));
}

class EmbedSource final : public DerivedSource
{
public:
  EmbedSource(Labeling x, Schedule schedule) : x_(std::move(x)), schedule_(schedule) {}

  int rank() const override { return 3; }
  unsigned alphabet() const override { return 9; }

  Symbol eval(const Word& g) const override
  {
    const auto split = decompose_prefix_block(g);
    if (std::holds_alternative<InF2>(split))
      return x_.eval(g.with_rank(2));
    const auto& block = std::get<PrefixBlock>(split);
    if (block.sign == Sign::minus)
      return kBlockFiller;
    const auto ij = schedule_.lookup(block.power);
    if (!ij)
      return kBlockFiller;
    return detail::fw_value(schedule_.w(ij->first, ij->second), x_, block.head) +
           kSublemmaOffset;
  }

  std::string provenance() const override { return "embed2to9(" + x_.describe() + ")"; }

  // For offsets in F_2, (t.f(x))(h c^p g') only involves t.x and t.f_w(x) at h, so two images
  // agree on B_3(1,r) iff the F_2 parts agree on B_2(1,r) and, for each m-value p <= r, the
  // matching f_w images agree on B_2(1,r-p).
  std::optional<Verdict> compare(const Word& offset, const DerivedSource& other,
                                 const Word& other_offset,
                                 std::optional<unsigned> radius) const override
  {
    const auto& that = static_cast<const EmbedSource&>(other);
    if (!(that.schedule_ == schedule_) || !offset.lies_in(2) || !other_offset.lies_in(2))
      return std::nullopt;
    const Word t = offset.with_rank(2);
    const Word t_other = other_offset.with_rank(2);
    const Labeling mine = shift(t, x_);
    const Labeling theirs = shift(t_other, that.x_);

    const Verdict whole = equal_points(mine, theirs, 0);
    if (whole.is_equal())
      return whole;
    if (!radius) {
      if (whole.is_distinct())
        return Verdict::distinct(lift(whole.witness()));
      return std::nullopt;
    }

    const Verdict base = equal_on_ball(mine, theirs, *radius);
    if (base.is_distinct())
      return Verdict::distinct(lift(base.witness()));

    bool unresolved = false;
    for (unsigned p = *radius; p >= 1; --p) {
      const auto ij = schedule_.lookup(p);
      if (!ij)
        continue;
      const Word w = schedule_.w(ij->first, ij->second);
      const Labeling f_mine = shift(t, fw(w, x_));
      const Labeling f_theirs = shift(t_other, fw(w, that.x_));
      const Verdict v = equal_on_ball(f_mine, f_theirs, *radius - p);
      if (v.is_distinct())
        return Verdict::distinct(lift(v.witness()) * c_power(p));
      if (v.is_unknown())
        unresolved = true;
    }
    if (base.is_unknown() || unresolved)
      return Verdict::unknown(*radius);
    return Verdict::equal();
  }

private:
  Labeling x_;
  Schedule schedule_;
};

}  // namespace

Labeling embed_2to9(const Labeling& x, const Schedule& schedule)
{
  if (x.rank() != 2 || x.alphabet() != 2)
    throw std::invalid_argument("embed_2to9: input must be a point of 2^{F_2}");
  if (!x.is_decidable())
    throw std::invalid_argument("embed_2to9: input must be a fin-support or quotient point");
  return Labeling::derived(std::make_shared<EmbedSource>(x, schedule));
}

std::string to_string(const CheckAResult& r)
{
  switch (r.status) {
    case CheckAResult::Status::pass:
      return "Pass (" + std::to_string(r.checked) + " index pairs)";
    case CheckAResult::Status::counterexample:
      return "Counterexample(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")" +
             (r.witness ? " at " + r.witness->str() : "");
    case CheckAResult::Status::inconclusive:
      return "Inconclusive(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
  }
  return "?";
}

CheckAResult check_A(const Labeling& y, Index imax, Index jmax, const Schedule& schedule,
                     std::optional<Index> max_m, unsigned budget)
{
  if (y.rank() != 3)
    throw std::invalid_argument("check_A: expects a point of F_3");
  CheckAResult result;
  std::optional<CheckAResult> inconclusive;
  for (Index i = 0; i <= imax; ++i) {
    for (Index j = 0; j <= jmax; ++j) {
      const Index m = schedule.m(i, j);
      if (max_m && m > *max_m)
        continue;
      ++result.checked;
      const Labeling left = shift(word_of_index(2, schedule.n(i, j)).with_rank(3), y);
      const Labeling right = shift(word_of_index(2, schedule.n(i, j + 1)).with_rank(3), y);
      const Verdict premise = equal_on_ball(left, right, static_cast<unsigned>(m));
      if (premise.is_distinct())
        continue;
      if (premise.is_unknown()) {
        if (!inconclusive)
          inconclusive = CheckAResult{CheckAResult::Status::inconclusive, i, j, std::nullopt, 0};
        continue;
      }
      const Verdict whole = equal_points(left, right, budget);
      if (whole.is_equal())
        continue;
      if (whole.is_distinct()) {
        result.status = CheckAResult::Status::counterexample;
        result.i = i;
        result.j = j;
        result.witness = whole.witness();
        return result;
      }
      if (!inconclusive)
        inconclusive = CheckAResult{CheckAResult::Status::inconclusive, i, j, std::nullopt, 0};
    }
  }
  if (inconclusive) {
    inconclusive->checked = result.checked;
    return *inconclusive;
  }
  return result;
}

}  // namespace shiftred
