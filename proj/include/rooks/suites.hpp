#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rooks/poset.hpp"

namespace rooks {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int samples = 100;     // random draws per placement
  unsigned workers = 0;  // 0: one per hardware thread
};

/// Boards above this size sample placements for the orbit suite instead of
/// sweeping all of them.
inline constexpr int kFullOrbitSweepBoard = 6;
inline constexpr int kSampledPlacements = 50;

/// Rank profiles are constant on orbits: for random Borel b and scalars xi,
/// rank_profile(b.f_{D,xi}) = R_D; the torus normalizer sends f_{D,xi} to f_D.
VerificationReport thm15_suite(int n, const SuiteOptions& options);
/// Polarization clauses, tangent dimensions against 2|M| and 2|M| + |D|,
/// the length bounds and orthogonal-subset sharpness.
VerificationReport thm24_suite(int n, const SuiteOptions& options);
/// Move calculus against brute-force covers.
VerificationReport thm33_suite(int n, const SuiteOptions& options);
/// Placement order versus Bruhat order of Kerov involutions.
VerificationReport cor18_suite(int n, const SuiteOptions& options);
/// Bruhat order of the permutations w implies the placement order.
VerificationReport proctor_suite(int n, const SuiteOptions& options);
/// Every placement lies below D_0.
VerificationReport d0max_suite(int n, const SuiteOptions& options);
/// Placement counts against Bell numbers for boards 1..n, and the
/// rank-matrix reconstruction round trip on the n-board.
VerificationReport counts_suite(int n, const SuiteOptions& options);

inline constexpr std::string_view kSuiteNames[] = {"thm15", "thm24", "thm33", "cor18",
                                                   "proctor", "d0max", "counts"};

/// One suite by name, or all of them for "all". Pairwise suites are capped
/// at kMaxPairwiseBoard and the cover suite at kMaxIndexBoard when run
/// through "all". Throws LimitExceeded / Parse for bad arguments.
std::vector<VerificationReport> run_suites(std::string_view name, int n, const SuiteOptions& options);

/// B_0..B_n by the Bell triangle.
std::vector<std::uint64_t> bell_numbers(int n);

}  // namespace rooks
