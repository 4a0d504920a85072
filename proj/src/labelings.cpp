#include "shiftred/labelings.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <typeinfo>

namespace shiftred {

namespace {

class ClosureSource final : public DerivedSource
{
public:
  ClosureSource(int rank, unsigned alphabet, std::string provenance,
                std::function<Symbol(const Word&)> eval)
  : rank_(rank), alphabet_(alphabet), provenance_(std::move(provenance)), eval_(std::move(eval))
  {}

  int rank() const override { return rank_; }
  unsigned alphabet() const override { return alphabet_; }
  Symbol eval(const Word& g) const override { return eval_(g); }
  std::string provenance() const override { return provenance_; }

private:
  int rank_;
  unsigned alphabet_;
  std::string provenance_;
  std::function<Symbol(const Word&)> eval_;
};

void check_symbol(unsigned alphabet, Symbol s)
{
  if (alphabet != kUnboundedAlphabet && s >= alphabet)
    throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                std::to_string(alphabet));
}

void check_comparable(const Labeling& x, const Labeling& y)
{
  if (x.rank() != y.rank())
    throw std::invalid_argument("cannot compare points of different rank");
  if (x.alphabet() != y.alphabet())
    throw std::invalid_argument("alphabet mismatch: " + std::to_string(x.alphabet()) + " vs " +
                                std::to_string(y.alphabet()));
}

Symbol lookup(const FinSupport& fs, const Word& g)
{
  auto it = fs.values.find(g);
  return it == fs.values.end() ? fs.background : it->second;
}

// Smallest word of length <= radius (if any) that is not a key of either support.
std::optional<Word> first_uncovered(int rank, const FinSupport& x, const FinSupport& y,
                                    std::optional<unsigned> radius)
{
  for (Index n = 0;; ++n) {
    Word w = word_of_index(rank, n);
    if (radius && w.length() > *radius)
      return std::nullopt;
    if (!x.values.contains(w) && !y.values.contains(w))
      return w;
  }
}

Verdict compare_fin_support(int rank, const FinSupport& x, const FinSupport& y,
                            std::optional<unsigned> radius)
{
  std::optional<Word> best;
  auto consider = [&](const Word& w) {
    if (radius && w.length() > *radius)
      return;
    if (best && !(w < *best))
      return;
    if (lookup(x, w) != lookup(y, w))
      best = w;
  };
  for (const auto& [w, s] : x.values)
    consider(w);
  for (const auto& [w, s] : y.values)
    consider(w);
  if (x.background != y.background)
    if (auto w = first_uncovered(rank, x, y, radius))
      consider(*w);
  return best ? Verdict::distinct(*best) : Verdict::equal();
}

// Breadth-first walk over pairs (phi_x(h), phi_y(h)).
Verdict compare_quotient(int rank, const QuotientPeriodic& x, const QuotientPeriodic& y,
                         std::optional<unsigned> radius)
{
  const unsigned nx = x.group->order();
  const unsigned ny = y.group->order();
  struct Node
  {
    unsigned qx, qy;
    Word path;
  };
  std::vector<bool> seen(static_cast<std::size_t>(nx) * ny, false);
  std::deque<Node> queue;
  queue.push_back({0, 0, Word(rank)});
  seen[0] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (x.labels[node.qx] != y.labels[node.qy])
      return Verdict::distinct(node.path);
    if (radius && node.path.length() >= *radius)
      continue;
    for (int l = 0; l < 2 * rank; ++l) {
      const int gen = l / 2;
      unsigned sx = x.images[gen], sy = y.images[gen];
      if (l % 2 == 1) {
        sx = x.group->inverse(sx);
        sy = y.group->inverse(sy);
      }
      const unsigned qx = x.group->mul(node.qx, sx);
      const unsigned qy = y.group->mul(node.qy, sy);
      const std::size_t key = static_cast<std::size_t>(qx) * ny + qy;
      if (seen[key])
        continue;
      seen[key] = true;
      queue.push_back({qx, qy, node.path * Word::generator(rank, gen, l % 2 == 1)});
    }
  }
  return Verdict::equal();
}

std::optional<Verdict> compare_structural(const Labeling& x, const Labeling& y,
                                          std::optional<unsigned> radius)
{
  if (const auto* fx = x.as_fin_support())
    if (const auto* fy = y.as_fin_support())
      return compare_fin_support(x.rank(), *fx, *fy, radius);
  if (const auto* qx = x.as_quotient())
    if (const auto* qy = y.as_quotient())
      return compare_quotient(x.rank(), *qx, *qy, radius);
  const auto* dx = x.as_derived();
  const auto* dy = y.as_derived();
  if (dx && dy && typeid(*dx->source) == typeid(*dy->source))
    return dx->source->compare(dx->offset, *dy->source, dy->offset, radius);
  return std::nullopt;
}

}  // namespace

std::string Verdict::str() const
{
  switch (kind_) {
    case Kind::equal:
      return "Equal";
    case Kind::distinct:
      return "Distinct(" + witness_.str() + ")";
    case Kind::unknown:
      return "Unknown(" + std::to_string(budget_) + ")";
  }
  return "?";
}

std::optional<Verdict> DerivedSource::compare(const Word&, const DerivedSource&, const Word&,
                                              std::optional<unsigned>) const
{
  return std::nullopt;
}

unsigned QuotientPeriodic::image_of(const Word& g) const
{
  unsigned q = 0;
  for (Letter l : g.letters()) {
    unsigned s = images[generator_of(l)];
    if (is_inverted(l))
      s = group->inverse(s);
    q = group->mul(q, s);
  }
  return q;
}

Labeling Labeling::fin_support(int rank, unsigned alphabet, Symbol background,
                               std::map<Word, Symbol> values)
{
  check_rank(rank);
  check_symbol(alphabet, background);
  for (auto it = values.begin(); it != values.end();) {
    if (it->first.rank() != rank)
      throw std::invalid_argument("support key " + it->first.str() + " has the wrong rank");
    check_symbol(alphabet, it->second);
    if (it->second == background)
      it = values.erase(it);
    else
      ++it;
  }
  return Labeling(rank, alphabet, FinSupport{background, std::move(values)});
}

Labeling Labeling::constant(int rank, unsigned alphabet, Symbol value)
{
  return fin_support(rank, alphabet, value);
}

Labeling Labeling::quotient(int rank, unsigned alphabet, std::shared_ptr<const FiniteGroup> group,
                            std::vector<unsigned> images, std::vector<Symbol> labels)
{
  check_rank(rank);
  if (!group)
    throw std::invalid_argument("quotient point needs a group");
  if (images.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("quotient point needs one generator image per generator");
  for (unsigned q : images)
    if (q >= group->order())
      throw std::invalid_argument("generator image outside the group");
  if (labels.size() != group->order())
    throw std::invalid_argument("label map must cover every group element");
  for (Symbol s : labels)
    check_symbol(alphabet, s);
  return Labeling(rank, alphabet,
                  QuotientPeriodic{std::move(group), std::move(images), std::move(labels)});
}

Labeling Labeling::derived(std::shared_ptr<const DerivedSource> source)
{
  const int rank = source->rank();
  check_rank(rank);
  const unsigned alphabet = source->alphabet();
  return Labeling(rank, alphabet, Derived{Word(rank), std::move(source)});
}

Labeling Labeling::from_function(int rank, unsigned alphabet, std::string provenance,
                                 std::function<Symbol(const Word&)> eval)
{
  return derived(
    std::make_shared<ClosureSource>(rank, alphabet, std::move(provenance), std::move(eval)));
}

Symbol Labeling::eval(const Word& g) const
{
  if (g.rank() != rank_)
    throw std::invalid_argument("cannot evaluate a rank-" + std::to_string(rank_) +
                                " point at a rank-" + std::to_string(g.rank()) + " word");
  return std::visit(
    [&](const auto& body) -> Symbol {
      using T = std::decay_t<decltype(body)>;
      if constexpr (std::is_same_v<T, FinSupport>)
        return lookup(body, g);
      else if constexpr (std::is_same_v<T, QuotientPeriodic>)
        return body.labels[body.image_of(g)];
      else
        return body.source->eval(body.offset.is_identity() ? g : body.offset.inverse() * g);
    },
    body_);
}

std::string Labeling::describe() const
{
  std::ostringstream out;
  std::visit(
    [&](const auto& body) {
      using T = std::decay_t<decltype(body)>;
      if constexpr (std::is_same_v<T, FinSupport>) {
        out << "fin-support k=" << rank_ << " alphabet=" << alphabet_
            << " default=" << body.background << " {";
        bool first = true;
        for (const auto& [w, s] : body.values) {
          out << (first ? "" : ", ") << w.str() << ":" << s;
          first = false;
        }
        out << "}";
      } else if constexpr (std::is_same_v<T, QuotientPeriodic>) {
        out << "quotient k=" << rank_ << " alphabet=" << alphabet_
            << " |Q|=" << body.group->order() << " images=[";
        for (std::size_t i = 0; i < body.images.size(); ++i)
          out << (i ? "," : "") << body.images[i];
        out << "] labels=[";
        for (std::size_t i = 0; i < body.labels.size(); ++i)
          out << (i ? "," : "") << body.labels[i];
        out << "]";
      } else {
        out << body.source->provenance();
        if (!body.offset.is_identity())
          out << " shifted by " << body.offset.str();
      }
    },
    body_);
  return out.str();
}

Labeling shift(const Word& g, const Labeling& x)
{
  if (g.rank() != x.rank_)
    throw std::invalid_argument("shift: rank mismatch");
  if (g.is_identity())
    return x;
  return std::visit(
    [&](const auto& body) -> Labeling {
      using T = std::decay_t<decltype(body)>;
      if constexpr (std::is_same_v<T, FinSupport>) {
        std::map<Word, Symbol> moved;
        for (const auto& [w, s] : body.values)
          moved.emplace(g * w, s);
        return Labeling(x.rank_, x.alphabet_, FinSupport{body.background, std::move(moved)});
      } else if constexpr (std::is_same_v<T, QuotientPeriodic>) {
        const unsigned q = body.image_of(g.inverse());
        std::vector<Symbol> labels(body.labels.size());
        for (unsigned p = 0; p < labels.size(); ++p)
          labels[p] = body.labels[body.group->mul(q, p)];
        return Labeling(x.rank_, x.alphabet_,
                        QuotientPeriodic{body.group, body.images, std::move(labels)});
      } else {
        return Labeling(x.rank_, x.alphabet_, Derived{g * body.offset, body.source});
      }
    },
    x.body_);
}

Labeling root_view(const Labeling& x, const Word& g) { return shift(g.inverse(), x); }

std::vector<Symbol> restrict(const Labeling& x, const Ball& ball)
{
  if (ball.rank != x.rank())
    throw std::invalid_argument("restrict: rank mismatch");
  std::vector<Symbol> pattern;
  pattern.reserve(ball.elements.size());
  for (const Word& g : ball.elements)
    pattern.push_back(x.eval(g));
  return pattern;
}

Verdict compare_literal(const Labeling& x, const Labeling& y, unsigned radius, std::size_t cap)
{
  check_comparable(x, y);
  std::optional<Word> witness;
  std::size_t spent = 0;
  bool complete = for_each_word(x.rank(), radius, [&](const Word& h) {
    if (spent++ >= cap)
      return false;
    if (x.eval(h) != y.eval(h)) {
      witness = h;
      return false;
    }
    return true;
  });
  if (witness)
    return Verdict::distinct(*witness);
  return complete ? Verdict::equal() : Verdict::unknown(radius);
}

Verdict equal_points(const Labeling& x, const Labeling& y, unsigned budget)
{
  check_comparable(x, y);
  if (auto v = compare_structural(x, y, std::nullopt))
    return *v;
  Verdict v = compare_literal(x, y, budget);
  return v.is_distinct() ? v : Verdict::unknown(budget);
}

Verdict equal_on_ball(const Labeling& x, const Labeling& y, unsigned radius)
{
  check_comparable(x, y);
  if (auto v = compare_structural(x, y, radius))
    return *v;
  return compare_literal(x, y, radius);
}

std::optional<Word> left_free_witness(const Labeling& x, const Word& g, const Word& gp,
                                      unsigned radius)
{
  if (g == gp)
    throw std::invalid_argument("left_free_witness: g and g' must differ");
  if (g.rank() != x.rank() || gp.rank() != x.rank())
    throw std::invalid_argument("left_free_witness: rank mismatch");
  std::optional<Word> found;
  for_each_word(x.rank(), radius, [&](const Word& h) {
    if (x.eval(h * g) != x.eval(h * gp)) {
      found = h;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Word> free_witness(const Labeling& x, const Word& g, unsigned budget)
{
  if (g.is_identity())
    throw std::invalid_argument("free_witness: g must not be the identity");
  if (g.rank() != x.rank())
    throw std::invalid_argument("free_witness: rank mismatch");
  const Word g_inv = g.inverse();
  std::optional<Word> found;
  for_each_word(x.rank(), budget, [&](const Word& h) {
    if (x.eval(g_inv * h) != x.eval(h)) {
      found = h;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace shiftred
