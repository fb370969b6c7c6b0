// rookctl: command-line front end for the rook placement library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rooks/board.hpp"
#include "rooks/exactlin.hpp"
#include "rooks/io.hpp"
#include "rooks/polarization.hpp"
#include "rooks/poset.hpp"
#include "rooks/suites.hpp"

namespace {

using namespace rooks;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string cells(const CellSet& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Cell& c : set) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  os << '}';
  return os.str();
}

void print_rank_matrix(std::ostream& os, const RankMatrix& r) {
  const int n = static_cast<int>(r.rows());
  os << "    ";
  for (int j = 1; j <= n; ++j) os << std::setw(3) << j;
  os << '\n';
  for (int i = 1; i <= n; ++i) {
    os << std::setw(4) << i;
    for (int j = 1; j <= n; ++j) os << std::setw(3) << r(i - 1, j - 1);
    os << '\n';
  }
}

int run_analyze(const std::string& path, bool json) {
  const RookPlacement d = read_placement(path);
  const RankMatrix r = rank_matrix(d);
  const Permutation w = permutation_of(d);
  const ChainDecomposition ch = chains(d);
  const MPData mp = mp_sets(d);
  const Dimensions dims = dimensions(d);
  const std::optional<Permutation> sigma =
      d.n() >= 2 ? std::optional<Permutation>(kerov_involution(d)) : std::nullopt;

  if (json) {
    Json chain_list = Json::array();
    for (const auto& c : ch.chains) chain_list.push_back(c);
    Json out{{"placement", to_json(d)},
             {"rank_matrix", to_json(r)},
             {"w", to_json(w)},
             {"length", dims.length},
             {"chains", std::move(chain_list)},
             {"fixed_points", ch.fixed_points},
             {"mp", to_json(mp)},
             {"dimensions",
              {{"m_size", dims.m_size},
               {"dim_theta", dims.dim_theta},
               {"dim_omega", dims.dim_omega},
               {"length", dims.length},
               {"d_size", dims.d_size}}},
             {"kerov_involution", sigma ? to_json(*sigma) : Json(nullptr)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "placement D = " << d << " on the " << d.n() << "-board, |D| = " << d.size() << "\n\n";
  std::cout << "rank matrix R_D:\n";
  print_rank_matrix(std::cout, r);
  std::cout << "\nw = " << w << ", l(w) = " << dims.length << '\n';
  std::cout << "cycles:";
  for (const auto& c : ch.chains) {
    std::cout << " (";
    for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
    std::cout << ')';
  }
  std::cout << "\n\n";
  for (const auto& [col, sets] : mp.per_rook) {
    std::cout << "M_" << col << " = " << cells(sets.m) << "  P_" << col << " = " << cells(sets.p) << '\n';
  }
  std::cout << "M = " << cells(mp.m) << "\nP = " << cells(mp.p) << "\n\n";
  std::cout << "dim Theta = 2|M| = " << dims.dim_theta << "  (l(w) - |D| = " << dims.length - dims.d_size
            << ")\n";
  std::cout << "dim Omega = 2|M| + |D| = " << dims.dim_omega << "  (l(w) = " << dims.length << ")\n";
  if (sigma) {
    std::cout << "sigma_D = " << *sigma << " in S_" << sigma->size() << '\n';
  } else {
    std::cout << "sigma_D undefined on the 1-board\n";
  }
  return kExitOk;
}

int run_covers(const std::string& path, bool brute_force, bool json) {
  const RookPlacement d = read_placement(path);
  const std::vector<CoverMove> moves = cover_moves(d);

  std::vector<RookPlacement> missing, extra;
  if (brute_force) {
    const PosetIndex index(d.n());
    const std::vector<RookPlacement> oracle = brute_force_lower_covers(index, d);
    std::vector<RookPlacement> from_moves;
    for (const auto& m : moves) from_moves.push_back(m.result);
    std::set_difference(oracle.begin(), oracle.end(), from_moves.begin(), from_moves.end(),
                        std::back_inserter(missing));
    std::set_difference(from_moves.begin(), from_moves.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(extra));
  }
  const bool agree = missing.empty() && extra.empty();

  if (json) {
    Json list = Json::array();
    for (const auto& m : moves) list.push_back(to_json(m));
    Json out{{"placement", to_json(d)}, {"covers", std::move(list)}};
    if (brute_force) {
      Json miss = Json::array(), ext = Json::array();
      for (const auto& t : missing) miss.push_back(to_json(t));
      for (const auto& t : extra) ext.push_back(to_json(t));
      out["brute_force"] = Json{{"agree", agree}, {"missing", std::move(miss)}, {"extra", std::move(ext)}};
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "lower covers of " << d << ": " << moves.size() << '\n';
    for (const auto& m : moves) {
      std::cout << "  " << std::left << std::setw(10) << to_string(m.kind) << std::right << " -";
      for (const Cell& c : m.removed) std::cout << ' ' << c;
      if (!m.added.empty()) {
        std::cout << " +";
        for (const Cell& c : m.added) std::cout << ' ' << c;
      }
      std::cout << "  => " << m.result << '\n';
    }
    if (brute_force) {
      std::cout << "brute-force oracle: " << (agree ? "agrees" : "DISAGREES") << '\n';
      for (const auto& t : missing) std::cout << "  missing cover " << t << '\n';
      for (const auto& t : extra) std::cout << "  not a cover " << t << '\n';
    }
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int run_verify(int n, const std::string& suite, const SuiteOptions& options, bool json) {
  const std::vector<VerificationReport> reports = run_suites(suite, n, options);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();

  if (json) {
    if (reports.size() == 1) {
      std::cout << to_json(reports.front()).dump(2) << '\n';
    } else {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      std::cout << list.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      std::cout << r.suite << " n=" << r.n << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked
                << " checked, " << r.failures.size() << " failures, seed " << r.seed << ", samples "
                << options.samples << ")\n";
      for (const auto& f : r.failures) {
        std::cout << "  - " << f.message;
        for (const auto& d : f.placements) std::cout << ' ' << d;
        std::cout << '\n';
      }
    }
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

int run_hasse(int n, const std::string& output) {
  const PosetIndex index(n);
  std::ofstream out(output);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + output);
  out << hasse_dot(index);
  std::size_t edges = 0;
  for (std::size_t k = 0; k < index.size(); ++k) edges += index.lower_covers(k).size();
  std::cout << "wrote " << index.size() << " nodes, " << edges << " edges to " << output << '\n';
  return kExitOk;
}

int run_enumerate(int n, bool count_only, bool json) {
  const std::vector<RookPlacement> all = enumerate(n);
  if (json) {
    if (count_only) {
      std::cout << Json{{"n", n}, {"count", all.size()}}.dump() << '\n';
    } else {
      Json list = Json::array();
      for (const auto& d : all) list.push_back(to_json(d));
      std::cout << list.dump() << '\n';
    }
  } else if (count_only) {
    std::cout << all.size() << '\n';
  } else {
    for (const auto& d : all) std::cout << rook_label(d) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rook placements in A_{n-1}: rank order, polarizations, covering relation"};
  app.require_subcommand(1);

  std::string path, suite, output;
  int n = 0;
  bool json = false, brute_force = false, count_only = false;
  SuiteOptions options;

  auto* analyze = app.add_subcommand("analyze", "rank matrix, permutations, M/P sets and orbit dimensions");
  analyze->add_option("placement", path, "placement JSON file")->required();
  analyze->add_flag("--json", json, "machine-readable output");

  auto* covers = app.add_subcommand("covers", "lower covers by the move calculus");
  covers->add_option("placement", path, "placement JSON file")->required();
  covers->add_flag("--brute-force", brute_force, "cross-check against rank-matrix comparisons");
  covers->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--n", n, "board size")->required()->check(CLI::Range(1, kMaxEnumerationBoard));
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"thm15", "thm24", "thm33", "cor18", "proctor", "d0max", "counts", "all"}));
  verify->add_option("--seed", options.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", options.samples, "random draws per placement")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "machine-readable output");

  auto* hasse = app.add_subcommand("hasse", "write the Hasse diagram as Graphviz DOT");
  hasse->add_option("--n", n, "board size")->required()->check(CLI::Range(1, kMaxIndexBoard));
  hasse->add_option("-o", output, "output .dot file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all placements of the n-board");
  enumerate_cmd->add_option("--n", n, "board size")->required()->check(CLI::Range(1, kMaxEnumerationBoard));
  enumerate_cmd->add_flag("--count-only", count_only, "print only the number of placements");
  enumerate_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(path, json);
    if (*covers) return run_covers(path, brute_force, json);
    if (*verify) return run_verify(n, suite, options, json);
    if (*hasse) return run_hasse(n, output);
    if (*enumerate_cmd) return run_enumerate(n, count_only, json);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BoundViolation) {
      std::cerr << "verification failure: " << e.what() << '\n';
      return kExitVerificationFailed;
    }
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
