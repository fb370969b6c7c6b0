#include "rooks/suites.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "rooks/exactlin.hpp"
#include "rooks/polarization.hpp"

namespace rooks {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

VerificationReport start_report(std::string suite, int n, const SuiteOptions& options) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.n = n;
  r.seed = options.seed;
  return r;
}

void finish(VerificationReport& r, Clock::time_point start) {
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Per-placement failures are collected in slots and concatenated in
// placement order, so reports do not depend on the worker count.
template <typename Check>
void sweep(const std::vector<RookPlacement>& placements, const SuiteOptions& options,
           VerificationReport& report, Check&& check) {
  std::vector<std::vector<Failure>> slots(placements.size());
  std::vector<std::uint64_t> counts(placements.size(), 0);
  detail::parallel_for(placements.size(), options.workers, [&](std::size_t k) {
    counts[k] = check(k, placements[k], slots[k]);
  });
  for (std::size_t k = 0; k < placements.size(); ++k) {
    report.checked += counts[k];
    for (auto& f : slots[k]) report.failures.push_back(std::move(f));
  }
}

std::string str(const auto& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

std::vector<std::uint64_t> bell_numbers(int n) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

VerificationReport thm15_suite(int n, const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report = start_report("thm15", n, options);
  std::vector<RookPlacement> placements = enumerate(n);
  if (n > kFullOrbitSweepBoard) {
    std::shuffle(placements.begin(), placements.end(), std::mt19937_64(mix(options.seed, ~0ULL)));
    placements.resize(kSampledPlacements);
    std::sort(placements.begin(), placements.end());
  }
  sweep(placements, options, report, [&](std::size_t k, const RookPlacement& d, std::vector<Failure>& out) {
    Sampler sampler(RandomSpec{mix(options.seed, k), 3});
    const RankMatrix expected = rank_matrix(d);
    const LinearForm<Rational> fd = f_form(d);
    std::uint64_t checked = 0;
    for (int s = 0; s < options.samples; ++s) {
      const auto b = sampler.borel(n, Scope::Borel);
      const auto xi = sampler.scalars(d);
      const LinearForm<Rational> f = f_form(d, xi);
      const Eigen::MatrixXi profile = rank_profile<Rational>(coadjoint<Rational>(b, f));
      if (profile != expected) {
        out.push_back({"rank profile of b.f_{D,xi} differs from R_D at sample " + std::to_string(s), {d}});
      }
      const Vector<Rational> t = diagonal_normalizer(d, xi);
      const Matrix<Rational> diag = t.asDiagonal();
      if (coadjoint<Rational>(diag, f) != fd) {
        out.push_back({"diagonal normalizer does not send f_{D,xi} to f_D at sample " + std::to_string(s), {d}});
      }
      checked += 2;
    }
    return checked;
  });
  finish(report, start);
  return report;
}

VerificationReport thm24_suite(int n, const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report = start_report("thm24", n, options);
  const std::vector<RookPlacement> placements = enumerate(n);
  sweep(placements, options, report, [&](std::size_t k, const RookPlacement& d, std::vector<Failure>& out) {
    std::uint64_t checked = 0;
    auto fail = [&](const std::string& what) { out.push_back({what, {d}}); };

    const MPData mp = mp_sets(d);
    for (const auto& [col, sets] : mp.per_rook) {
      if (sets.m.size() != sets.p.size()) fail("|M_j| != |P_j| for column " + std::to_string(col));
    }
    for (const Cell& c : mp.m) {
      if (d.contains(c) || mp.p.contains(c)) fail("M meets D or P at " + str(c));
    }
    for (const Cell& c : mp.p) {
      if (d.contains(c)) fail("P meets D at " + str(c));
    }
    if (auto t = subalgebra_witness(d)) {
      fail("non-admissible triple (" + std::to_string(t->i) + "," + std::to_string(t->k) + "," +
           std::to_string(t->j) + ")");
    }
    ++checked;

    Dimensions dims;
    try {
      dims = dimensions(d);
    } catch (const Error& e) {
      fail(e.what());
      return checked;
    }
    const auto ch = chains(d);
    const bool orthogonal = std::all_of(ch.chains.begin(), ch.chains.end(),
                                        [](const auto& c) { return c.size() <= 2; });
    if (orthogonal && dims.dim_theta != dims.length - dims.d_size) {
      fail("orthogonal subset with 2|M| = " + std::to_string(dims.dim_theta) +
           " != l(w) - |D| = " + std::to_string(dims.length - dims.d_size));
    }
    const int borel = tangent_dim<Rational>(f_form(d), Scope::Borel);
    if (borel != dims.dim_omega || borel > dims.length) {
      fail("B-orbit tangent dimension " + std::to_string(borel) + " != 2|M| + |D| = " +
           std::to_string(dims.dim_omega));
    }
    checked += 2;

    Sampler sampler(RandomSpec{mix(options.seed, k), 3});
    for (int s = 0; s < options.samples; ++s) {
      const ScalarAssignment xi = s == 0 ? ScalarAssignment::unit(d) : sampler.scalars(d);
      const PolarizationReport pr = check_polarization(d, xi);
      if (!pr.passed()) {
        std::ostringstream msg;
        msg << "polarization check failed at sample " << s << ": isotropic=" << pr.isotropic
            << " codimension=" << pr.codimension << "/" << pr.expected_codimension
            << " rank=" << pr.form_rank << " subalgebra=" << !pr.subalgebra_witness;
        if (pr.isotropy_witness) msg << " witness " << pr.isotropy_witness->first << pr.isotropy_witness->second;
        fail(msg.str());
      }
      const int unipotent = tangent_dim<Rational>(f_form(d, xi), Scope::Unipotent);
      if (unipotent != dims.dim_theta) {
        fail("U-orbit tangent dimension " + std::to_string(unipotent) + " != 2|M| = " +
             std::to_string(dims.dim_theta) + " at sample " + std::to_string(s));
      }
      if (pr.form_rank != unipotent) {
        fail("isotropy form rank " + std::to_string(pr.form_rank) + " != tangent dimension " +
             std::to_string(unipotent));
      }
      checked += 3;
    }
    return checked;
  });
  finish(report, start);
  return report;
}

VerificationReport thm33_suite(int n, const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report = verify_covers(PosetIndex(n, options.workers));
  report.seed = options.seed;
  finish(report, start);
  return report;
}

VerificationReport cor18_suite(int n, const SuiteOptions& options) {
  VerificationReport report = order_property_suite(n, OrderChecks::Kerov);
  report.seed = options.seed;
  return report;
}

VerificationReport proctor_suite(int n, const SuiteOptions& options) {
  VerificationReport report = order_property_suite(n, OrderChecks::Proctor);
  report.seed = options.seed;
  return report;
}

VerificationReport d0max_suite(int n, const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report = start_report("d0max", n, options);
  const RookPlacement top = maximal_element(n);
  for (const auto& d : enumerate(n)) {
    if (!leq(d, top)) report.failures.push_back({"placement is not below D_0", {d, top}});
    ++report.checked;
  }
  finish(report, start);
  return report;
}

VerificationReport counts_suite(int n, const SuiteOptions& options) {
  const auto start = Clock::now();
  VerificationReport report = start_report("counts", n, options);
  const auto bell = bell_numbers(n);
  for (int k = 1; k <= n; ++k) {
    const std::size_t count = enumerate(k).size();
    if (count != bell[k]) {
      report.failures.push_back({"board " + std::to_string(k) + " has " + std::to_string(count) +
                                     " placements, Bell number is " + std::to_string(bell[k]),
                                 {}});
    }
    ++report.checked;
  }
  std::set<std::vector<int>> seen;
  for (const auto& d : enumerate(n)) {
    const RankMatrix r = rank_matrix(d);
    if (!seen.insert(std::vector<int>(r.data(), r.data() + r.size())).second) {
      report.failures.push_back({"rank matrix shared with another placement", {d}});
    }
    try {
      if (placement_from_rank_matrix(r) != d) {
        report.failures.push_back({"reconstruction from R_D gives a different placement", {d}});
      }
    } catch (const Error& e) {
      report.failures.push_back({std::string("reconstruction failed: ") + e.what(), {d}});
    }
    ++report.checked;
  }
  finish(report, start);
  return report;
}

std::vector<VerificationReport> run_suites(std::string_view name, int n, const SuiteOptions& options) {
  using Suite = VerificationReport (*)(int, const SuiteOptions&);
  auto pick = [](std::string_view s) -> Suite {
    if (s == "thm15") return thm15_suite;
    if (s == "thm24") return thm24_suite;
    if (s == "thm33") return thm33_suite;
    if (s == "cor18") return cor18_suite;
    if (s == "proctor") return proctor_suite;
    if (s == "d0max") return d0max_suite;
    if (s == "counts") return counts_suite;
    return nullptr;
  };
  if (name != "all") {
    Suite suite = pick(name);
    if (!suite) throw Error(ErrorKind::Parse, "unknown suite '" + std::string(name) + "'");
    return {suite(n, options)};
  }
  std::vector<VerificationReport> reports;
  for (std::string_view s : kSuiteNames) {
    int board = n;
    if (s == "cor18" || s == "proctor") board = std::min(n, kMaxPairwiseBoard);
    if (s == "thm33") board = std::min(n, kMaxIndexBoard);
    reports.push_back(pick(s)(board, options));
  }
  return reports;
}

}  // namespace rooks
