#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftred/encoding.hpp"
#include "shiftred/freegroup.hpp"

namespace shiftred {

/// Finite group on {0..order-1} with identity 0, given by its multiplication table.
class FiniteGroup
{
public:
  static FiniteGroup cyclic(unsigned order);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric3();

  /// Validates identity 0, the Latin-square property and associativity.
  static FiniteGroup from_table(const std::vector<std::vector<unsigned>>& rows);

  unsigned order() const { return order_; }
  unsigned mul(unsigned p, unsigned q) const { return table_[p * order_ + q]; }
  unsigned inverse(unsigned q) const { return inverse_[q]; }
  unsigned element_order(unsigned q) const;

private:
  FiniteGroup(unsigned order, std::vector<unsigned> table);

  unsigned order_;
  std::vector<unsigned> table_;
  std::vector<unsigned> inverse_;
};

/// Outcome of a point-equality query. A Distinct witness h is a word where the two points
/// differ; Unknown carries the radius searched without finding one.
class Verdict
{
public:
  enum class Kind { equal, distinct, unknown };

  static Verdict equal() { return Verdict(Kind::equal, {}, 0); }
  static Verdict distinct(Word witness) { return Verdict(Kind::distinct, std::move(witness), 0); }
  static Verdict unknown(unsigned budget) { return Verdict(Kind::unknown, {}, budget); }

  Kind kind() const { return kind_; }
  bool is_equal() const { return kind_ == Kind::equal; }
  bool is_distinct() const { return kind_ == Kind::distinct; }
  bool is_unknown() const { return kind_ == Kind::unknown; }
  const Word& witness() const { return witness_; }
  unsigned budget() const { return budget_; }

  std::string str() const;

private:
  Verdict(Kind kind, Word witness, unsigned budget)
  : kind_(kind), witness_(std::move(witness)), budget_(budget)
  {}

  Kind kind_;
  Word witness_;
  unsigned budget_;
};

/// Alphabet size 0 stands for N-valued labelings.
constexpr unsigned kUnboundedAlphabet = 0;

struct FinSupport
{
  Symbol background;
  std::map<Word, Symbol> values;  // reduced keys, none equal to background
};

struct QuotientPeriodic
{
  std::shared_ptr<const FiniteGroup> group;
  std::vector<unsigned> images;  // one per generator
  std::vector<Symbol> labels;    // one per group element

  unsigned image_of(const Word& g) const;
};

/// Evaluation rule of a derived point. Implementations must be pure.
class DerivedSource
{
public:
  virtual ~DerivedSource() = default;

  virtual int rank() const = 0;
  virtual unsigned alphabet() const = 0;
  virtual Symbol eval(const Word& g) const = 0;
  virtual std::string provenance() const = 0;

  /// Exact comparison of offset.(*this) with other_offset.other, on B(1, *radius) when a
  /// radius is given and globally otherwise. `other` has the same dynamic type. Returns
  /// nullopt when no structural rule applies.
  virtual std::optional<Verdict> compare(const Word& offset, const DerivedSource& other,
                                         const Word& other_offset,
                                         std::optional<unsigned> radius) const;
};

struct Derived
{
  Word offset;  // value at h is source.eval(offset^-1 h)
  std::shared_ptr<const DerivedSource> source;
};

/// A point of X^{F_k} with a finite description.
class Labeling
{
public:
  static Labeling fin_support(int rank, unsigned alphabet, Symbol background,
                              std::map<Word, Symbol> values = {});
  static Labeling constant(int rank, unsigned alphabet, Symbol value);
  static Labeling quotient(int rank, unsigned alphabet, std::shared_ptr<const FiniteGroup> group,
                           std::vector<unsigned> images, std::vector<Symbol> labels);
  static Labeling derived(std::shared_ptr<const DerivedSource> source);
  static Labeling from_function(int rank, unsigned alphabet, std::string provenance,
                                std::function<Symbol(const Word&)> eval);

  int rank() const { return rank_; }
  unsigned alphabet() const { return alphabet_; }

  /// Throws std::invalid_argument on rank mismatch.
  Symbol eval(const Word& g) const;
  Symbol operator()(const Word& g) const { return eval(g); }

  /// FinSupport and QuotientPeriodic points; equality between them is decidable.
  bool is_decidable() const { return !std::holds_alternative<Derived>(body_); }

  const FinSupport* as_fin_support() const { return std::get_if<FinSupport>(&body_); }
  const QuotientPeriodic* as_quotient() const { return std::get_if<QuotientPeriodic>(&body_); }
  const Derived* as_derived() const { return std::get_if<Derived>(&body_); }

  std::string describe() const;

  friend Labeling shift(const Word& g, const Labeling& x);

private:
  using Body = std::variant<FinSupport, QuotientPeriodic, Derived>;
  Labeling(int rank, unsigned alphabet, Body body)
  : rank_(rank), alphabet_(alphabet), body_(std::move(body))
  {}

  int rank_;
  unsigned alphabet_;
  Body body_;
};

/// The shift action (g.x)(h) = x(g^-1 h). FinSupport and QuotientPeriodic are preserved.
Labeling shift(const Word& g, const Labeling& x);

/// x viewed from root g: h -> x(g h), i.e. shift(g^-1, x).
Labeling root_view(const Labeling& x, const Word& g);

std::vector<Symbol> restrict(const Labeling& x, const Ball& ball);

/// Bound on pointwise evaluations spent by literal (non-structural) ball comparisons.
constexpr std::size_t kLiteralEvaluationCap = 250'000;

/// Global equality. Exact for FinSupport x FinSupport, QuotientPeriodic x QuotientPeriodic
/// and derived points with a structural rule; otherwise compares on B(1, budget) and never
/// answers Equal. Throws std::invalid_argument on rank or alphabet mismatch.
Verdict equal_points(const Labeling& x, const Labeling& y, unsigned budget);

/// Agreement on B(1, radius); Equal means the restrictions coincide.
Verdict equal_on_ball(const Labeling& x, const Labeling& y, unsigned radius);

/// Pointwise scan of B(1, radius) in enumeration order, up to `cap` evaluations.
Verdict compare_literal(const Labeling& x, const Labeling& y, unsigned radius,
                        std::size_t cap = kLiteralEvaluationCap);

/// h with |h| <= radius and x(h g) != x(h g'). Throws when g == g'.
std::optional<Word> left_free_witness(const Labeling& x, const Word& g, const Word& gp,
                                      unsigned radius);

/// h with |h| <= budget and (g.x)(h) != x(h). Throws when g is the identity.
std::optional<Word> free_witness(const Labeling& x, const Word& g, unsigned budget);

}  // namespace shiftred
