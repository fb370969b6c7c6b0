#pragma once

#include <filesystem>

#include <json.hpp>

#include "rooks/board.hpp"
#include "rooks/exactlin.hpp"
#include "rooks/polarization.hpp"
#include "rooks/poset.hpp"

namespace rooks {

using Json = nlohmann::ordered_json;

/// {"n": n, "rooks": [[i, j], ...]} with rooks in canonical order.
Json to_json(const RookPlacement& d);
/// Accepts rooks in any order. Throws Parse on malformed input and the
/// validation errors of RookPlacement::validate.
RookPlacement placement_from_json(const Json& j);
RookPlacement read_placement(const std::filesystem::path& path);

Json to_json(const Cell& c);
Json to_json(const CellSet& cells);
/// {"M": [...], "P": [...], "per_rook": {"<j>": {"M": [...], "P": [...]}}}.
Json to_json(const MPData& mp);
Json to_json(const Permutation& w);
/// Row-major nested arrays.
Json to_json(const Eigen::MatrixXi& m);
/// Row-major nested arrays of "p/q" strings.
Json to_json(const Matrix<Rational>& m);
Json to_json(const CoverMove& move);
/// {suite, n, checked, failures: [...], seed, millis}.
Json to_json(const VerificationReport& report);

}  // namespace rooks
