#include <stdexcept>

#include "shiftred/reductions.hpp"

namespace shiftred {

Coordinate fstar_coordinate(const Labeling& y, Index k)
{
  if (y.rank() != 3)
    throw std::invalid_argument("fstar: expects a point of F_3");
  const auto [n, m] = unpair(k);
  return Coordinate{n, m, shift(word_of_index(2, n).with_rank(3), y)};
}

Natural materialize(const Coordinate& c)
{
  if (c.m > kMaxMaterializedRadius)
    throw std::length_error("pattern code of radius " + std::to_string(c.m) +
                            " is too large to expand (limit " +
                            std::to_string(kMaxMaterializedRadius) + ")");
  const auto radius = static_cast<unsigned>(c.m);
  return pattern_code(radius, restrict(c.view, ball(3, radius)));
}

std::vector<Natural> fstar(const Labeling& y, Index count)
{
  std::vector<Natural> out;
  out.reserve(count);
  for (Index k = 0; k < count; ++k)
    out.push_back(materialize(fstar_coordinate(y, k)));
  return out;
}

CoordinateMatch compare_coordinates(const Coordinate& a, const Coordinate& b)
{
  if (a.m != b.m)
    return {true, Verdict::unknown(0)};
  return {false, equal_on_ball(a.view, b.view, static_cast<unsigned>(a.m))};
}

Encoder pipeline_encoder(const Schedule& schedule)
{
  return [schedule](const Labeling& x, Index k) {
    return fstar_coordinate(embed_2to9(x, schedule), k);
  };
}

std::vector<Natural> encode_pipeline(const Labeling& x, const Schedule& schedule, Index count)
{
  return fstar(embed_2to9(x, schedule), count);
}

std::string to_string(const ForwardResult& r)
{
  switch (r.status) {
    case ForwardResult::Status::pass:
      return "Pass";
    case ForwardResult::Status::fail:
      return "Fail(" + std::to_string(r.k) + "): " + r.reason +
             (r.witness ? " at " + r.witness->str() : "");
    case ForwardResult::Status::inconclusive:
      return "Inconclusive(" + std::to_string(r.k) + "): " + r.reason;
  }
  return "?";
}

ForwardResult verify_forward(const Labeling& x, Index a, Index count, const Encoder& encoder)
{
  const Labeling moved = shift(word_of_index(2, a), x);
  std::optional<ForwardResult> inconclusive;
  for (Index k = 0; k < count; ++k) {
    const Index radius = unpair(k).second;
    const Coordinate lhs = encoder(moved, k);
    if (lhs.m != radius)
      return {ForwardResult::Status::fail, k,
              "coordinate encodes radius " + std::to_string(lhs.m) + " instead of " +
                std::to_string(radius),
              std::nullopt};
    const Index target = pi_apply(a, k);
    const Coordinate rhs = encoder(x, target);
    if (rhs.m != radius)
      return {ForwardResult::Status::fail, k,
              "coordinate " + std::to_string(target) + " encodes radius " +
                std::to_string(rhs.m) + " instead of " + std::to_string(radius),
              std::nullopt};
    const CoordinateMatch match = compare_coordinates(lhs, rhs);
    if (match.differ())
      return {ForwardResult::Status::fail, k,
              "encode(g_a.x)[k] != encode(x)[pi_a(k)] with pi_a(k) = " + std::to_string(target),
              match.patterns.is_distinct() ? std::optional<Word>(match.patterns.witness())
                                           : std::nullopt};
    if (!match.equal() && !inconclusive)
      inconclusive = ForwardResult{ForwardResult::Status::inconclusive, k,
                                   "pattern comparison undecided", std::nullopt};
  }
  if (inconclusive)
    return *inconclusive;
  return {};
}

std::string to_string(const RefuteResult& r)
{
  if (r.refuted())
    return "RefutedUpTo(" + std::to_string(r.max_a) + ")";
  std::string out = "PossiblyEquivalent(";
  for (std::size_t i = 0; i < r.possibly_equivalent.size(); ++i)
    out += (i ? "," : "") + std::to_string(r.possibly_equivalent[i]);
  return out + ")";
}

RefuteResult refute_equivalence(const Labeling& x, const Labeling& y, Index max_a, Index count,
                                const Encoder& encoder)
{
  RefuteResult result{max_a, {}};
  for (Index a = 0; a <= max_a; ++a) {
    bool refuted = false;
    for (Index k = 0; k < count && !refuted; ++k)
      refuted = compare_coordinates(encoder(y, k), encoder(x, pi_apply(a, k))).differ();
    if (!refuted)
      result.possibly_equivalent.push_back(a);
  }
  return result;
}

}  // namespace shiftred
