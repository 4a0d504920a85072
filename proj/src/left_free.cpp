#include <cmath>
#include <stdexcept>

#include "shiftred/reductions.hpp"

namespace shiftred {

namespace {

constexpr Symbol kSquare = 3;
constexpr Symbol kNonSquare = 2;

Symbol z0_value(const Word& w) { return is_perfect_square(w.length()) ? kSquare : kNonSquare; }

class Z0Source final : public DerivedSource
{
public:
  int rank() const override { return 2; }
  unsigned alphabet() const override { return 4; }
  Symbol eval(const Word& g) const override { return z0_value(g); }
  std::string provenance() const override { return "z0"; }
};

class LfEmbedSource final : public DerivedSource
{
public:
  explicit LfEmbedSource(Labeling x) : x_(std::move(x)) {}

  int rank() const override { return 3; }
  unsigned alphabet() const override { return 4; }

  Symbol eval(const Word& h) const override
  {
    const auto split = decompose_suffix_f2(h);
    if (std::holds_alternative<InF2>(split))
      return x_.eval(h.with_rank(2));
    return z0_value(std::get<SuffixSplit>(split).suffix);
  }

  std::string provenance() const override { return "lfembed(" + x_.describe() + ")"; }

private:
  Labeling x_;
};

Index ceil_half(Index v) { return (v + 1) / 2; }

}  // namespace

bool is_perfect_square(Index v)
{
  auto r = static_cast<Index>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  return r * r == v;
}

Labeling z0() { return Labeling::derived(std::make_shared<Z0Source>()); }

Index z0_witness_bound(const Word& g, const Word& gp)
{
  const Index k = ceil_half((g.inverse() * gp).length() + 1);
  return k * k + g.length();
}

Word z0_witness(const Word& g, const Word& gp)
{
  if (g.rank() != 2 || gp.rank() != 2)
    throw std::invalid_argument("z0_witness: words must lie in F_2");
  const Word u = g.inverse() * gp;
  if (u.is_identity())
    throw std::invalid_argument("z0_witness: g and g' must differ");
  const Index k = ceil_half(u.length() + 1);
  // a letter whose inverse is not the first letter of u, so l^{k^2} u is reduced
  const Letter l = u.front() == make_letter(0, true) ? make_letter(1, false) : make_letter(0, false);
  const Word block = power(Word::generator(2, generator_of(l), is_inverted(l)),
                           static_cast<long>(k * k));
  return block * g.inverse();
}

Labeling lf_embed(const Labeling& x)
{
  if (x.rank() != 2 || x.alphabet() != 2)
    throw std::invalid_argument("lf_embed: input must be a point of 2^{F_2}");
  return Labeling::derived(std::make_shared<LfEmbedSource>(x));
}

Word lf_witness(const Word& g, const Word& gp)
{
  if (g.rank() != 3 || gp.rank() != 3)
    throw std::invalid_argument("lf_witness: words must lie in F_3");
  const Word u = g.inverse() * gp;
  if (u.is_identity())
    throw std::invalid_argument("lf_witness: g and g' must differ");
  if (!u.lies_in(2))
    return g.inverse();
  // h g = c p, where z0(p) != z0(p u)
  const Word p = z0_witness(Word(2), u.with_rank(2)).with_rank(3);
  return Word::generator(3, 2) * p * g.inverse();
}

Index lf_witness_bound(const Word& g, const Word& gp)
{
  const Word u = g.inverse() * gp;
  if (!u.lies_in(2))
    return g.length();
  const Index k = ceil_half(u.length() + 1);
  return 1 + k * k + g.length();
}

}  // namespace shiftred
