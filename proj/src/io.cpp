#include "rooks/io.hpp"

#include <fstream>

namespace rooks {

Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

Json to_json(const RookPlacement& d) {
  Json rooks = Json::array();
  for (const Cell& c : d) rooks.push_back(to_json(c));
  return Json{{"n", d.n()}, {"rooks", std::move(rooks)}};
}

RookPlacement placement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rooks")) {
    throw Error(ErrorKind::Parse, "placement must be an object with \"n\" and \"rooks\"");
  }
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::Parse, "\"n\" must be an integer");
  if (!j["rooks"].is_array()) throw Error(ErrorKind::Parse, "\"rooks\" must be an array");
  std::vector<Cell> cells;
  for (const auto& rook : j["rooks"]) {
    if (!rook.is_array() || rook.size() != 2 || !rook[0].is_number_integer() ||
        !rook[1].is_number_integer()) {
      throw Error(ErrorKind::Parse, "each rook must be a pair [i, j] of integers");
    }
    cells.push_back(Cell{rook[0].get<int>(), rook[1].get<int>()});
  }
  return RookPlacement::validate(j["n"].get<int>(), cells);
}

RookPlacement read_placement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Parse, path.string() + " is not valid JSON");
  return placement_from_json(j);
}

Json to_json(const CellSet& cells) {
  Json out = Json::array();
  for (const Cell& c : cells) out.push_back(to_json(c));
  return out;
}

Json to_json(const MPData& mp) {
  Json per_rook = Json::object();
  for (const auto& [col, sets] : mp.per_rook) {
    per_rook[std::to_string(col)] = Json{{"M", to_json(sets.m)}, {"P", to_json(sets.p)}};
  }
  return Json{{"M", to_json(mp.m)}, {"P", to_json(mp.p)}, {"per_rook", std::move(per_rook)}};
}

Json to_json(const Permutation& w) { return Json(w.one_line()); }

Json to_json(const Eigen::MatrixXi& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CoverMove& move) {
  Json removed = Json::array(), added = Json::array();
  for (const Cell& c : move.removed) removed.push_back(to_json(c));
  for (const Cell& c : move.added) added.push_back(to_json(c));
  return Json{{"kind", std::string(to_string(move.kind))},
              {"removed", std::move(removed)},
              {"added", std::move(added)},
              {"result", to_json(move.result)}};
}

Json to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const Failure& f : report.failures) {
    Json placements = Json::array();
    for (const auto& d : f.placements) placements.push_back(to_json(d));
    failures.push_back(Json{{"message", f.message}, {"placements", std::move(placements)}});
  }
  return Json{{"suite", report.suite},     {"n", report.n},
              {"checked", report.checked}, {"failures", std::move(failures)},
              {"seed", report.seed},       {"millis", report.millis}};
}

}  // namespace rooks
