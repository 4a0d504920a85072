#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "shiftred/labelings.hpp"

namespace shiftred {

/// Line-oriented point file:
///
///   labeling <fin-support|quotient> k=<2|3> alphabet=<n> [default=<v>]
///   set <word> <symbol>                      (fin-support)
///   group cyclic <n> | group table <n>       (quotient; a table is followed by n rows)
///   hom a=<q> b=<q> [c=<q>]
///   label <q> <symbol>
///
/// Blank lines and text after '#' are ignored.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string source, int line, const std::string& message);

  const std::string& source() const { return source_; }
  int line() const { return line_; }

private:
  std::string source_;
  int line_;
};

Labeling parse_point(std::istream& in, const std::string& source = "<input>");
Labeling parse_point_text(const std::string& text, const std::string& source = "<input>");
Labeling load_point(const std::string& path);

/// Serializes FinSupport and QuotientPeriodic points; derived points are rejected.
std::string format_point(const Labeling& x);

}  // namespace shiftred
