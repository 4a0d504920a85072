#pragma once

#include <string>

#include "shiftred/reductions.hpp"

namespace shiftred::detail {

/// f_w(x)(g), computed from x viewed from root g.
Symbol fw_value(const Word& w, const Labeling& x, const Word& g);

class FwSource final : public DerivedSource
{
public:
  FwSource(Word w, Labeling x);

  int rank() const override { return 2; }
  unsigned alphabet() const override { return 6; }
  Symbol eval(const Word& g) const override { return fw_value(w_, x_, g); }
  std::string provenance() const override;

  std::optional<Verdict> compare(const Word& offset, const DerivedSource& other,
                                 const Word& other_offset,
                                 std::optional<unsigned> radius) const override;

  const Word& w() const { return w_; }
  const Labeling& source() const { return x_; }

private:
  Word w_;
  Labeling x_;
};

/// Pointwise comparison of offset.a against other_offset.b on B(1, radius), up to `cap`
/// evaluations.
Verdict compare_sources_literal(const DerivedSource& a, const Word& offset,
                                const DerivedSource& b, const Word& other_offset,
                                unsigned radius, std::size_t cap = kLiteralEvaluationCap);

}  // namespace shiftred::detail
