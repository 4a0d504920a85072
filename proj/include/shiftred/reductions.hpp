#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftred/encoding.hpp"
#include "shiftred/freegroup.hpp"
#include "shiftred/labelings.hpp"

namespace shiftred {

// ---------------------------------------------------------------------------
// Schedule

/// Index schedule n(i,j), m(i,j) with words w(i,j) = g_{n(i,j)} g_{n(i,j+1)}^-1 in F_2.
///
/// The standard schedule is n(i,j) = j+1 and m(i,j) = <i,j> + 1. It satisfies
///   0 < n(i,j) < n(i,j+1),  0 < m(i,j) < m(i,j+1),
///   (i,j) != (i',j')  =>  m(i,j) != m(i',j'),
/// and every positive integer is an m-value.
class Schedule
{
public:
  static Schedule standard() { return Schedule(); }

  Index n(Index i, Index j) const;
  Index m(Index i, Index j) const;
  Word w(Index i, Index j) const;

  /// The unique (i,j) with m(i,j) == m_value, if any.
  std::optional<std::pair<Index, Index>> lookup(Index m_value) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

private:
  Schedule() = default;
};

// ---------------------------------------------------------------------------
// Sublemma map f_w : 2^{F_2} -> 6^{F_2}

/// Which rule of the case analysis fixed the second component t of f_w(x)(g).
enum class SublemmaBranch {
  invariant,           // x looks the same from g and gw
  z_largest,           // Z has a largest element
  z_least,             // Z has a least element but no largest one
  complement_largest,  // Z unbounded both ways; Z^c has a largest element
  complement_least,    // ... Z^c has a least element only
  alternating,         // Z and Z^c unbounded both ways; decided through Z'
};

std::string to_string(SublemmaBranch b);

struct SublemmaCase
{
  SublemmaBranch branch;
  unsigned radius;  // n_g(x); 0 in the invariant case
  long anchor;      // i0, or the least positive element of Z' (0 when 0 is in Z')
  unsigned t;       // in {0,1,2}
};

/// Case analysis for f_w at the root of `view` (x viewed from g). The view must be a
/// FinSupport or QuotientPeriodic point of 2^{F_2}.
SublemmaCase sublemma_case(const Word& w, const Labeling& view);

/// f_w(x)(g) = code6(x(g), t) where t comes from sublemma_case(w, root_view(x, g)).
/// Throws std::invalid_argument for w = 1 or an undecidable x.
Labeling fw(const Word& w, const Labeling& x);

// ---------------------------------------------------------------------------
// Embedding 2^{F_2} -> 9^{F_3} and the set A

/// f(x)(g) = x(g) on F_2; 2 when the first c-block of g is negative or its length is not
/// an m-value; f_{w(i,j)}(x)(h) + 3 when g = h c^{m(i,j)} g'.
Labeling embed_2to9(const Labeling& x, const Schedule& schedule = Schedule::standard());

struct CheckAResult
{
  enum class Status { pass, counterexample, inconclusive };
  Status status = Status::pass;
  Index i = 0;
  Index j = 0;
  std::optional<Word> witness;  // where g_{n(i,j)}.y and g_{n(i,j+1)}.y differ
  std::size_t checked = 0;      // number of (i,j) examined
};

std::string to_string(const CheckAResult& r);

/// Tests the defining implication of A at every i <= imax, j <= jmax (and m(i,j) <= max_m
/// when given). `budget` is the comparison radius for points without an exact rule.
CheckAResult check_A(const Labeling& y, Index imax, Index jmax,
                     const Schedule& schedule = Schedule::standard(),
                     std::optional<Index> max_m = std::nullopt, unsigned budget = 6);

// ---------------------------------------------------------------------------
// Encoder f*

/// Coordinate <n,m> of y*: the code of (g_n . y) restricted to B_3(1, m), kept unexpanded.
struct Coordinate
{
  Index n;
  Index m;
  Labeling view;  // g_n . y
};

Coordinate fstar_coordinate(const Labeling& y, Index k);

/// Largest radius whose pattern code is expanded (|B_3(1,6)| = 23437 digits).
constexpr Index kMaxMaterializedRadius = 6;

/// Throws std::length_error past kMaxMaterializedRadius.
Natural materialize(const Coordinate& c);

/// y*(0..count-1) as numbers.
std::vector<Natural> fstar(const Labeling& y, Index count);

struct CoordinateMatch
{
  bool radius_differs;
  Verdict patterns;  // meaningful when the radii agree
  bool equal() const { return !radius_differs && patterns.is_equal(); }
  bool differ() const { return radius_differs || patterns.is_distinct(); }
};

/// Equality of two coordinates' codes without expanding them.
CoordinateMatch compare_coordinates(const Coordinate& a, const Coordinate& b);

using Encoder = std::function<Coordinate(const Labeling& x, Index k)>;

/// k -> fstar_coordinate(embed_2to9(x), k).
Encoder pipeline_encoder(const Schedule& schedule = Schedule::standard());

std::vector<Natural> encode_pipeline(const Labeling& x, const Schedule& schedule, Index count);

struct ForwardResult
{
  enum class Status { pass, fail, inconclusive };
  Status status = Status::pass;
  Index k = 0;
  std::string reason;
  std::optional<Word> witness;
};

std::string to_string(const ForwardResult& r);

/// Checks encode(g_a.x)[k] == encode(x)[pi_a(k)] and that coordinate k carries radius
/// m where k = <n,m>, for every k < count.
ForwardResult verify_forward(const Labeling& x, Index a, Index count,
                             const Encoder& encoder = pipeline_encoder());

struct RefuteResult
{
  Index max_a;
  std::vector<Index> possibly_equivalent;  // a with no witness below the coordinate bound
  bool refuted() const { return possibly_equivalent.empty(); }
};

std::string to_string(const RefuteResult& r);

/// For each a <= max_a, searches k < count with encode(y)[k] != encode(x)[pi_a(k)].
RefuteResult refute_equivalence(const Labeling& x, const Labeling& y, Index max_a, Index count,
                                const Encoder& encoder = pipeline_encoder());

// ---------------------------------------------------------------------------
// Left-free point and the embedding 2^{F_2} -> 4^{F_3}

bool is_perfect_square(Index v);

/// z0(w) = 3 when |w| is a perfect square, 2 otherwise; a left-free point of {2,3}^{F_2}.
Labeling z0();

/// k^2 + |g| with k = ceil((|g^-1 g'| + 1)/2).
Index z0_witness_bound(const Word& g, const Word& gp);

/// h = l^{k^2} g^-1 for a letter l that does not cancel against g^-1 g'.
Word z0_witness(const Word& g, const Word& gp);

/// f(x)(h) = x(h) on F_2; z0(h') when h = h_1 c^{±1} h' with h' in F_2.
Labeling lf_embed(const Labeling& x);

/// Witness for left-freeness of lf_embed(x) at g != g' in F_3, following the two cases of
/// the argument, and the bound on its length.
Word lf_witness(const Word& g, const Word& gp);
Index lf_witness_bound(const Word& g, const Word& gp);

}  // namespace shiftred
