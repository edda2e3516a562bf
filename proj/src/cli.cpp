#include "groot/cli.hpp"

#include "groot/enumerate.hpp"
#include "groot/graph6.hpp"
#include "groot/isomorphism.hpp"
#include "groot/metrics.hpp"
#include "groot/mining.hpp"
#include "groot/oracle.hpp"
#include "groot/reconstruct.hpp"
#include "groot/root_isomorphism.hpp"
#include "groot/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace groot::cli {
namespace {

// Thrown after the diagnostic has been written; carries the exit code.
struct Exit {
  int code;
};

struct InputLine {
  std::size_t number;
  Graph graph;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out(out), err(err) {}

  // Reads graph6 lines from `path` ("-" or empty for stdin), skipping blanks.
  std::vector<InputLine> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* source = &in_;
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) fail(exit_code::kOperational, "cannot open " + path);
      source = &file;
    }
    std::vector<InputLine> graphs;
    std::string line;
    for (std::size_t number = 1; std::getline(*source, line); ++number) {
      trim(line);
      if (line.empty()) continue;
      try {
        graphs.push_back({number, parse_graph6(line)});
      } catch (const Graph6Error& e) {
        fail(exit_code::kBadGraph6, label(path) + " line " + std::to_string(number) + ": " + e.what());
      }
    }
    return graphs;
  }

  Graph read_single(const std::string& path) {
    auto graphs = read_graphs(path);
    if (graphs.empty()) fail(exit_code::kBadGraph6, label(path) + ": no graph found");
    return std::move(graphs.front().graph);
  }

  [[noreturn]] void fail(int code, const std::string& message) {
    err << "groot: " << message << '\n';
    throw Exit{code};
  }

  static void trim(std::string& s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  }

 private:
  static std::string label(const std::string& path) {
    return path.empty() || path == "-" ? std::string("stdin") : path;
  }

  std::istream& in_;

 public:
  std::ostream& out;
  std::ostream& err;
};

Girth parse_girth(const std::string& text) {
  if (text == "inf") return Girth::infinite();
  std::size_t used = 0;
  const unsigned long value = std::stoul(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad girth bound " + text);
  return Girth::finite(std::max<unsigned long>(value, 3));
}

std::string evidence_name(NonIsomorphismEvidence e) {
  return e == NonIsomorphismEvidence::DegreeSequence ? "degree-sequence" : "exhaustive-search";
}

std::string describe(const SameSquarePair& p) {
  return emit_graph6(p.first) + " " + emit_graph6(p.second) + " girths=" +
         p.first_girth.to_string() + "," + p.second_girth.to_string() +
         " evidence=" + evidence_name(p.evidence);
}

// --- subcommands -----------------------------------------------------------

int cmd_power(Io& io, std::size_t r, const std::string& file) {
  for (const auto& line : io.read_graphs(file)) io.out << emit_graph6(power(line.graph, r)) << '\n';
  return exit_code::kOk;
}

int cmd_girth(Io& io, const std::string& file) {
  for (const auto& line : io.read_graphs(file)) io.out << girth(line.graph).to_string() << '\n';
  return exit_code::kOk;
}

int cmd_sqrt(Io& io, const std::vector<std::size_t>& seed, const std::string& file) {
  if (seed.size() != 3) io.fail(exit_code::kUsage, "--seed takes exactly three vertices U,V,W");
  int code = exit_code::kOk;
  for (const auto& line : io.read_graphs(file)) {
    const Graph& g = line.graph;
    if (std::any_of(seed.begin(), seed.end(), [&](std::size_t v) { return v >= g.order(); })) {
      io.fail(exit_code::kOperational,
              "line " + std::to_string(line.number) + ": seed vertex out of range");
    }
    const auto outcome = reconstruct_from_seed(g, SeedPath(seed[0], seed[1], seed[2]));
    if (outcome.has_root()) {
      io.out << emit_graph6(outcome.root()) << '\n';
    } else {
      const auto& c = outcome.contradiction();
      io.out << "contradiction " << to_string(c.stage) << ": " << c.detail << '\n';
      code = exit_code::kNoRoot;
    }
  }
  return code;
}

int cmd_roots(Io& io, std::size_t girth_min, const std::string& file) {
  for (const auto& line : io.read_graphs(file)) {
    const auto roots = enumerate_roots(line.graph, girth_min);
    for (const auto& h : roots) io.out << emit_graph6(h) << '\n';
    io.out << "count: " << roots.size() << '\n';
  }
  return exit_code::kOk;
}

int cmd_iso(Io& io, const std::string& file1, const std::string& file2,
            const std::string& square_file) {
  const Graph h1 = io.read_single(file1);
  const Graph h2 = io.read_single(file2);
  const Graph target = square_file.empty() ? square(h1) : io.read_single(square_file);

  // Relabel each root so that its square is exactly `target`.
  auto align = [&](const Graph& h, const char* which) {
    auto m = are_isomorphic(square(h), target);
    if (!m) io.fail(exit_code::kOperational, std::string("square of ") + which +
                                                 " root is not isomorphic to the given square");
    return *m;
  };
  const VertexMap m1 = align(h1, "first");
  const VertexMap m2 = align(h2, "second");
  const Graph a = h1.relabeled(m1.image());
  const Graph b = h2.relabeled(m2.image());

  const auto report = build_isomorphism(a, b, target);
  const VertexMap inner =
      std::holds_alternative<EqualRoots>(report) ? VertexMap::identity(a.order())
                                                  : std::get<Involution>(report).map;
  // Original labels of h1 -> original labels of h2.
  const VertexMap overall = m2.inverse().compose(inner.compose(m1));
  if (std::holds_alternative<EqualRoots>(report) && overall.is_identity()) {
    io.out << "EQUAL\n";
  } else {
    io.out << overall.cycle_notation() << '\n';
  }
  return exit_code::kOk;
}

int cmd_verify(Io& io, std::size_t n_max) {
  bool ok = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto r = verify_uniqueness(n);
    io.out << "n=" << n << " graphs=" << r.graphs << " roots=" << r.roots
           << " equal=" << r.equal_roots << " involutions=" << r.involutions
           << " failures=" << r.failures.size() << '\n';
    for (const auto& f : r.failures) io.err << "  " << f << '\n';
    ok = ok && r.passed();
  }
  io.out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? exit_code::kOk : exit_code::kFailure;
}

struct MineOptions {
  std::size_t n = 0;
  std::string girth_min = "3";
  std::size_t min_degree = 0;
  bool allow_disconnected = false;
  std::string resume;
  std::string checkpoint;
  std::string check;
};

int cmd_mine_check(Io& io, const std::string& file) {
  std::ifstream in(file);
  if (!in) io.fail(exit_code::kOperational, "cannot open " + file);
  int code = exit_code::kOk;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    Io::trim(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string first;
    std::string second;
    fields >> first >> second;
    Graph a;
    Graph b;
    try {
      a = parse_graph6(first);
      b = parse_graph6(second);
    } catch (const Graph6Error& e) {
      io.fail(exit_code::kBadGraph6, file + " line " + std::to_string(number) + ": " + e.what());
    }
    if (auto pair = certify_same_square_pair(a, b)) {
      io.out << describe(*pair) << '\n';
    } else {
      io.out << "not-a-pair " << first << ' ' << second << '\n';
      code = exit_code::kNoRoot;
    }
  }
  return code;
}

int cmd_mine(Io& io, const MineOptions& o) {
  if (!o.check.empty()) return cmd_mine_check(io, o.check);
  if (o.n == 0) io.fail(exit_code::kUsage, "mine needs --n");

  Girth bound = Girth::infinite();
  try {
    bound = parse_girth(o.girth_min);
  } catch (const std::exception&) {
    io.fail(exit_code::kUsage, "--girth-min takes an integer or 'inf'");
  }
  SearchConstraints c{o.n, bound, o.min_degree, !o.allow_disconnected};
  std::optional<Graph> resume;
  if (!o.resume.empty()) {
    std::ifstream in(o.resume);
    std::string line;
    if (!in || !std::getline(in, line)) io.fail(exit_code::kOperational, "cannot read " + o.resume);
    Io::trim(line);
    const auto ckpt = Checkpoint::from_line(line);
    if (ckpt.signature != c.signature()) {
      io.fail(exit_code::kOperational, "checkpoint signature '" + ckpt.signature +
                                           "' does not match '" + c.signature() + "'");
    }
    resume = ckpt.last;
  }

  std::optional<Graph> last = resume;
  std::size_t since_save = 0;
  auto save = [&] {
    if (o.checkpoint.empty() || !last) return;
    std::ofstream(o.checkpoint, std::ios::trunc) << Checkpoint{*last, c.signature()}.to_line() << '\n';
  };

  std::size_t pairs = 0;
  find_same_square_pairs(
      c,
      [&](const SameSquarePair& p) {
        io.out << describe(p) << '\n';
        ++pairs;
      },
      resume,
      [&](const Graph& g) {
        last = g;
        if (++since_save == 256) {
          save();
          since_save = 0;
        }
      });
  save();
  io.out << "pairs: " << pairs << '\n';
  return exit_code::kOk;
}

int cmd_tree_powers(Io& io, std::size_t r, std::size_t n) {
  const auto pairs = complete_power_tree_pairs(r, n);
  for (const auto& p : pairs) io.out << emit_graph6(p.first) << ' ' << emit_graph6(p.second) << '\n';
  io.out << "count: " << pairs.size() << '\n';
  return exit_code::kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io(in, out, err);
  CLI::App app{"Graph powers, girth and square roots of girth at least six", "groot"};
  app.require_subcommand(1);

  std::size_t r = 2;
  std::string file;
  auto* power_cmd = app.add_subcommand("power", "r-th power of each input graph");
  power_cmd->add_option("-r", r, "exponent")->required()->check(CLI::PositiveNumber);
  power_cmd->add_option("file", file, "graph6 input (default stdin)");

  auto* girth_cmd = app.add_subcommand("girth", "girth of each input graph ('inf' for forests)");
  girth_cmd->add_option("file", file, "graph6 input (default stdin)");

  std::vector<std::size_t> seed;
  auto* sqrt_cmd = app.add_subcommand("sqrt", "reconstruct the root containing a seed path");
  sqrt_cmd->add_option("--seed", seed, "path U,V,W in the root")->required()->delimiter(',');
  sqrt_cmd->add_option("file", file, "graph6 input (default stdin)");

  std::size_t girth_min = 6;
  auto* roots_cmd = app.add_subcommand("roots", "all square roots above a girth bound");
  roots_cmd->add_option("--girth-min", girth_min, "minimum root girth")->required();
  roots_cmd->add_option("file", file, "graph6 input (default stdin)");

  std::string file1;
  std::string file2;
  std::string square_file;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism between two roots of one square");
  iso_cmd->add_option("file1", file1, "first root")->required();
  iso_cmd->add_option("file2", file2, "second root")->required();
  iso_cmd->add_option("--square", square_file, "common square (default: square of file1)");

  std::size_t n_max = 0;
  auto* verify_cmd = app.add_subcommand("verify-thm", "exhaustive uniqueness check");
  verify_cmd->add_option("--n-max", n_max, "largest order checked")->required();

  MineOptions mine;
  auto* mine_cmd = app.add_subcommand("mine", "search for non-isomorphic graphs with isomorphic squares");
  mine_cmd->add_option("--n", mine.n, "vertex count");
  mine_cmd->add_option("--girth-min", mine.girth_min, "minimum girth (integer or 'inf')");
  mine_cmd->add_option("--min-degree", mine.min_degree, "minimum degree");
  mine_cmd->add_flag("--allow-disconnected", mine.allow_disconnected, "include disconnected graphs");
  mine_cmd->add_option("--resume", mine.resume, "checkpoint file to resume from");
  mine_cmd->add_option("--checkpoint", mine.checkpoint, "checkpoint file to write");
  mine_cmd->add_option("--check", mine.check, "verify candidate pairs, two graph6 per line");

  std::size_t tree_n = 0;
  auto* tree_cmd = app.add_subcommand("tree-powers", "non-isomorphic trees with complete r-th power");
  tree_cmd->add_option("-r", r, "exponent")->required()->check(CLI::Range(3, 1 << 20));
  tree_cmd->add_option("--n", tree_n, "vertex count")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (power_cmd->parsed()) return cmd_power(io, r, file);
    if (girth_cmd->parsed()) return cmd_girth(io, file);
    if (sqrt_cmd->parsed()) return cmd_sqrt(io, seed, file);
    if (roots_cmd->parsed()) return cmd_roots(io, girth_min, file);
    if (iso_cmd->parsed()) return cmd_iso(io, file1, file2, square_file);
    if (verify_cmd->parsed()) return cmd_verify(io, n_max);
    if (mine_cmd->parsed()) return cmd_mine(io, mine);
    if (tree_cmd->parsed()) return cmd_tree_powers(io, r, tree_n);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    err << "groot: " << e.what() << '\n';
    return exit_code::kOperational;
  }
  return exit_code::kUsage;
}

}  // namespace groot::cli
