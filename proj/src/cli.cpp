#include "shiftred/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "shiftred/point_file.hpp"
#include "shiftred/reductions.hpp"
#include "shiftred/suites.hpp"

namespace shiftred {

namespace {

constexpr int kUsageError = 2;

// A point file path, or @z0 for the built-in left-free point.
Labeling load_cli_point(const std::string& path)
{
  if (path == "@z0")
    return z0();
  return load_point(path);
}

template<typename T>
std::string joined(const std::vector<T>& items)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out << (i ? " " : "") << items[i];
  return out.str();
}

std::string joined_words(const std::vector<Word>& words)
{
  std::vector<std::string> text;
  for (const Word& w : words)
    text.push_back(w.str());
  return joined(text);
}

Labeling require_rank2_bits(const Labeling& x, const std::string& what)
{
  if (x.rank() != 2 || x.alphabet() != 2)
    throw std::invalid_argument(what + " expects a point of 2^{F_2} (k=2 alphabet=2)");
  return x;
}

struct Options
{
  int k = 2;
  Index count = 0;
  std::string center = "1";
  unsigned radius = 0;
  Index a = 0;
  Index coord = 0;
  std::string w;
  std::string point;
  std::string at;
  bool explain = false;
  Index imax = 0;
  Index jmax = 0;
  std::optional<Index> max_m;
  std::string g;
  std::string gp;
  bool lf = false;
  std::string target = "all";
  std::uint64_t seed = 1;
  std::optional<unsigned> depth;
};

int run_verify(const Options& o, std::ostream& out)
{
  SuiteConfig config;
  config.seed = o.seed;
  if (o.depth)
    config = config.with_depth(*o.depth);
  const Report report =
    run_suites(config, o.target == "all" ? std::nullopt : std::optional(o.target));
  report.render(out);
  return report.exit_code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Shift-action reductions on free groups", "shiftred"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enum", "print g_0 .. g_{N-1}");
  enumerate->add_option("--k", o.k, "rank (2 or 3)")->check(CLI::IsMember({2, 3}));
  enumerate->add_option("--count", o.count, "number of words")->required();

  auto* ball_cmd = app.add_subcommand("ball", "print B_k(center, radius)");
  ball_cmd->add_option("--k", o.k, "rank (2 or 3)")->check(CLI::IsMember({2, 3}));
  ball_cmd->add_option("--center", o.center, "center word");
  ball_cmd->add_option("--radius", o.radius, "radius")->required();

  auto* pi = app.add_subcommand("pi", "apply pi_a");
  pi->add_option("--a", o.a, "group index a")->required();
  pi->add_option("--k", o.coord, "coordinate k")->required();

  auto* fw_cmd = app.add_subcommand("fw", "evaluate f_w(x) at a word of F_2");
  fw_cmd->add_option("--w", o.w, "nontrivial word of F_2")->required();
  fw_cmd->add_option("--point", o.point, "point file")->required();
  fw_cmd->add_option("--at", o.at, "position")->required();
  fw_cmd->add_flag("--explain", o.explain, "also print the case analysis");

  auto* embed = app.add_subcommand("embed", "evaluate the embedding into 9^{F_3}");
  embed->add_option("--point", o.point, "point file")->required();
  embed->add_option("--at", o.at, "position in F_3")->required();

  auto* lfembed = app.add_subcommand("lfembed", "evaluate the embedding into 4^{F_3}");
  lfembed->add_option("--point", o.point, "point file")->required();
  lfembed->add_option("--at", o.at, "position in F_3")->required();

  auto* encode = app.add_subcommand("encode", "first K coordinates of y*");
  encode->add_option("--point", o.point, "point file (k=3 taken as y, k=2 embedded first)")
    ->required();
  encode->add_option("--coords", o.count, "number of coordinates")->required();

  auto* check_a = app.add_subcommand("check-a", "test membership conditions of A");
  check_a->add_option("--point", o.point, "point file (k=3 taken as y, k=2 embedded first)")
    ->required();
  check_a->add_option("--imax", o.imax, "largest i")->required();
  check_a->add_option("--jmax", o.jmax, "largest j")->required();
  check_a->add_option("--max-m", o.max_m, "only (i,j) with m(i,j) <= this");

  auto* leftfree = app.add_subcommand("leftfree", "search h with x(hg) != x(hg')");
  leftfree->add_option("--point", o.point, "point file, or @z0")->required();
  leftfree->add_option("--g", o.g, "first word")->required();
  leftfree->add_option("--gp", o.gp, "second word")->required();
  leftfree->add_option("--radius", o.radius, "search radius")->required();
  leftfree->add_flag("--lf", o.lf, "search in the image under the 4^{F_3} embedding");

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("target", o.target, "all, or one suite name");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--depth", o.depth, "radius of the position balls");

  std::vector<std::string> argv_text{"shiftred"};
  argv_text.insert(argv_text.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_text)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (enumerate->parsed()) {
      std::vector<Word> words;
      for (Index n = 0; n < o.count; ++n)
        words.push_back(word_of_index(o.k, n));
      out << joined_words(words) << '\n';
      return 0;
    }
    if (ball_cmd->parsed()) {
      out << joined_words(ball(Word::parse(o.k, o.center), o.radius).elements) << '\n';
      return 0;
    }
    if (pi->parsed()) {
      out << pi_apply(o.a, o.coord) << '\n';
      return 0;
    }
    if (fw_cmd->parsed()) {
      const Labeling x = require_rank2_bits(load_cli_point(o.point), "fw");
      const Word w = Word::parse(2, o.w);
      const Word g = Word::parse(2, o.at);
      out << fw(w, x).eval(g) << '\n';
      if (o.explain) {
        const SublemmaCase c = sublemma_case(w, root_view(x, g));
        out << "bit " << x.eval(g) << " t " << c.t << " branch " << to_string(c.branch)
            << " n " << c.radius << " anchor " << c.anchor << '\n';
      }
      return 0;
    }
    if (embed->parsed()) {
      const Labeling x = require_rank2_bits(load_cli_point(o.point), "embed");
      out << embed_2to9(x).eval(Word::parse(3, o.at)) << '\n';
      return 0;
    }
    if (lfembed->parsed()) {
      const Labeling x = require_rank2_bits(load_cli_point(o.point), "lfembed");
      out << lf_embed(x).eval(Word::parse(3, o.at)) << '\n';
      return 0;
    }
    if (encode->parsed()) {
      const Labeling x = load_cli_point(o.point);
      const Labeling y = x.rank() == 3 ? x : embed_2to9(require_rank2_bits(x, "encode"));
      out << joined(fstar(y, o.count)) << '\n';
      return 0;
    }
    if (check_a->parsed()) {
      const Labeling x = load_cli_point(o.point);
      const Labeling y = x.rank() == 3 ? x : embed_2to9(require_rank2_bits(x, "check-a"));
      const CheckAResult r = check_A(y, o.imax, o.jmax, Schedule::standard(), o.max_m);
      out << to_string(r) << '\n';
      if (r.status == CheckAResult::Status::inconclusive)
        err << "warning: some conditions could not be decided\n";
      return r.status == CheckAResult::Status::counterexample ? 1 : 0;
    }
    if (leftfree->parsed()) {
      Labeling x = load_cli_point(o.point);
      if (o.lf)
        x = lf_embed(require_rank2_bits(x, "leftfree --lf"));
      const auto h =
        left_free_witness(x, Word::parse(x.rank(), o.g), Word::parse(x.rank(), o.gp), o.radius);
      if (!h) {
        out << "none within radius " << o.radius << '\n';
        return 1;
      }
      out << h->str() << '\n';
      return 0;
    }
    if (verify->parsed())
      return run_verify(o, out);
  } catch (const ParseError& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "shiftred: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace shiftred
