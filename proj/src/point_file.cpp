#include "shiftred/point_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace shiftred {

ParseError::ParseError(std::string source, int line, const std::string& message)
: std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
  source_(std::move(source)), line_(line)
{}

namespace {

std::vector<std::string> tokens_of(const std::string& line)
{
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;)
    out.push_back(t);
  return out;
}

class Parser
{
public:
  Parser(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  Labeling run();

private:
  [[noreturn]] void fail(const std::string& message) const
  {
    throw ParseError(source_, line_no_, message);
  }

  bool next_line(std::vector<std::string>& tokens)
  {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens = tokens_of(line);
      if (!tokens.empty())
        return true;
    }
    return false;
  }

  unsigned number(const std::string& text, const char* what) const
  {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      fail(std::string("expected a non-negative integer for ") + what + ", got '" + text + "'");
    return v;
  }

  // key=value
  std::pair<std::string, unsigned> assignment(const std::string& token) const
  {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      fail("expected key=value, got '" + token + "'");
    return {token.substr(0, eq), number(token.substr(eq + 1), token.substr(0, eq).c_str())};
  }

  Word word(const std::string& text) const
  {
    try {
      return Word::parse(rank_, text);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Labeling fin_support();
  Labeling quotient();

  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
  int rank_ = 2;
  unsigned alphabet_ = 2;
  std::optional<unsigned> background_;
};

Labeling Parser::run()
{
  std::vector<std::string> header;
  if (!next_line(header)) {
    line_no_ = std::max(line_no_, 1);
    fail("empty point file");
  }
  if (header[0] != "labeling" || header.size() < 4)
    fail("expected 'labeling <fin-support|quotient> k=<2|3> alphabet=<n> [default=<v>]'");
  const std::string kind = header[1];
  bool have_k = false, have_alphabet = false;
  for (std::size_t i = 2; i < header.size(); ++i) {
    auto [key, value] = assignment(header[i]);
    if (key == "k") {
      if (value != 2 && value != 3)
        fail("k must be 2 or 3");
      rank_ = static_cast<int>(value);
      have_k = true;
    } else if (key == "alphabet") {
      if (value == 0)
        fail("alphabet must be positive");
      alphabet_ = value;
      have_alphabet = true;
    } else if (key == "default") {
      background_ = value;
    } else {
      fail("unknown header field '" + key + "'");
    }
  }
  if (!have_k || !have_alphabet)
    fail("header needs both k= and alphabet=");
  if (kind == "fin-support")
    return fin_support();
  if (kind == "quotient") {
    if (background_)
      fail("default= applies only to fin-support points");
    return quotient();
  }
  fail("unknown labeling class '" + kind + "'");
}

Labeling Parser::fin_support()
{
  const Symbol background = background_.value_or(0);
  if (background >= alphabet_)
    fail("default symbol outside the alphabet");
  std::map<Word, Symbol> values;
  std::vector<std::string> t;
  while (next_line(t)) {
    if (t[0] != "set" || t.size() != 3)
      fail("expected 'set <word> <symbol>'");
    Word w = word(t[1]);
    const Symbol s = number(t[2], "symbol");
    if (s >= alphabet_)
      fail("symbol " + t[2] + " outside the alphabet");
    if (!values.emplace(w, s).second)
      fail("word " + w.str() + " is set twice");
  }
  return Labeling::fin_support(rank_, alphabet_, background, std::move(values));
}

Labeling Parser::quotient()
{
  std::shared_ptr<const FiniteGroup> group;
  std::vector<std::optional<unsigned>> images(static_cast<std::size_t>(rank_));
  std::vector<std::optional<Symbol>> labels;
  bool have_hom = false;
  std::vector<std::string> t;
  while (next_line(t)) {
    if (t[0] == "group") {
      if (group)
        fail("group given twice");
      if (t.size() != 3)
        fail("expected 'group cyclic <n>' or 'group table <n>'");
      const unsigned n = number(t[2], "group order");
      if (n == 0)
        fail("group order must be positive");
      if (t[1] == "cyclic") {
        group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
      } else if (t[1] == "table") {
        std::vector<std::vector<unsigned>> rows;
        for (unsigned r = 0; r < n; ++r) {
          std::vector<std::string> row;
          if (!next_line(row))
            fail("group table ended after " + std::to_string(r) + " rows");
          std::vector<unsigned> values;
          for (const auto& cell : row)
            values.push_back(number(cell, "table entry"));
          rows.push_back(std::move(values));
        }
        try {
          group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else {
        fail("unknown group kind '" + t[1] + "'");
      }
      labels.assign(group->order(), std::nullopt);
    } else if (t[0] == "hom") {
      if (!group)
        fail("hom before group");
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto [key, value] = assignment(t[i]);
        if (key.size() != 1 || key[0] < 'a' || key[0] >= 'a' + rank_)
          fail("unknown generator '" + key + "'");
        if (value >= group->order())
          fail("image " + std::to_string(value) + " is not a group element");
        images[static_cast<std::size_t>(key[0] - 'a')] = value;
      }
      have_hom = true;
    } else if (t[0] == "label") {
      if (!group)
        fail("label before group");
      if (t.size() != 3)
        fail("expected 'label <q> <symbol>'");
      const unsigned q = number(t[1], "group element");
      const Symbol s = number(t[2], "symbol");
      if (q >= group->order())
        fail("label for non-element " + t[1]);
      if (s >= alphabet_)
        fail("symbol " + t[2] + " outside the alphabet");
      labels[q] = s;
    } else {
      fail("unexpected '" + t[0] + "' in a quotient point");
    }
  }
  ++line_no_;
  if (!group)
    fail("missing group line");
  if (!have_hom)
    fail("missing hom line");
  std::vector<unsigned> image_values;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i])
      fail(std::string("missing image for generator ") + static_cast<char>('a' + i));
    image_values.push_back(*images[i]);
  }
  std::vector<Symbol> label_values;
  for (std::size_t q = 0; q < labels.size(); ++q) {
    if (!labels[q])
      fail("missing label for group element " + std::to_string(q));
    label_values.push_back(*labels[q]);
  }
  return Labeling::quotient(rank_, alphabet_, std::move(group), std::move(image_values),
                            std::move(label_values));
}

}  // namespace

Labeling parse_point(std::istream& in, const std::string& source)
{
  return Parser(in, source).run();
}

Labeling parse_point_text(const std::string& text, const std::string& source)
{
  std::istringstream in(text);
  return parse_point(in, source);
}

Labeling load_point(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(path, 0, "cannot open file");
  return parse_point(in, path);
}

std::string format_point(const Labeling& x)
{
  std::ostringstream out;
  if (const auto* fs = x.as_fin_support()) {
    out << "labeling fin-support k=" << x.rank() << " alphabet=" << x.alphabet()
        << " default=" << fs->background << "\n";
    for (const auto& [w, s] : fs->values)
      out << "set " << w.str() << " " << s << "\n";
    return out.str();
  }
  if (const auto* qp = x.as_quotient()) {
    const unsigned n = qp->group->order();
    out << "labeling quotient k=" << x.rank() << " alphabet=" << x.alphabet() << "\n";
    out << "group table " << n << "\n";
    for (unsigned p = 0; p < n; ++p) {
      for (unsigned q = 0; q < n; ++q)
        out << (q ? " " : "") << qp->group->mul(p, q);
      out << "\n";
    }
    out << "hom";
    for (std::size_t i = 0; i < qp->images.size(); ++i)
      out << " " << static_cast<char>('a' + i) << "=" << qp->images[i];
    out << "\n";
    for (unsigned q = 0; q < n; ++q)
      out << "label " << q << " " << qp->labels[q] << "\n";
    return out.str();
  }
  throw std::invalid_argument("format_point: derived points have no file form");
}

}  // namespace shiftred
