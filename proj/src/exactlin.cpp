#include "rooks/exactlin.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <regex>

namespace rooks {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex shape(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, shape)) throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::Parse, "not a rational: '" + text + "'");
  }
}

int rank_bareiss(Matrix<Integer> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Integer lead = a(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const Integer below = a(r, c);
      for (Eigen::Index k = c + 1; k < cols; ++k) {
        // Exact: every entry stays a minor of the original matrix.
        a(r, k) = (lead * a(r, k) - below * a(rank, k)) / prev;
      }
      a(r, c) = 0;
    }
    prev = lead;
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank(const Matrix<Rational>& a) {
  Matrix<Integer> scaled(a.rows(), a.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Integer lcm = 1;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      lcm = boost::integer::lcm(lcm, Integer(denominator(a(r, c))));
    }
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      scaled(r, c) = numerator(a(r, c)) * (lcm / denominator(a(r, c)));
    }
  }
  return rank_bareiss(std::move(scaled));
}

LinearForm<Rational> f_form(const RookPlacement& d, const ScalarAssignment& xi) {
  LinearForm<Rational> f = LinearForm<Rational>::Zero(d.n(), d.n());
  for (const Cell& c : d) f(c.row - 1, c.col - 1) = xi(c);
  return f;
}

LinearForm<Rational> f_form(const RookPlacement& d) { return f_form(d, ScalarAssignment::unit(d)); }

PolarizationReport check_polarization(const RookPlacement& d, const ScalarAssignment& xi) {
  PolarizationReport report;
  const auto roots = positive_roots(d.n());
  const MPData mp = mp_sets(d);
  const Matrix<Rational> form = isotropy_form<Rational>(f_form(d, xi));

  std::vector<Eigen::Index> inside;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!mp.m.contains(roots[k])) inside.push_back(static_cast<Eigen::Index>(k));
  }
  for (Eigen::Index r : inside) {
    for (Eigen::Index s : inside) {
      if (form(r, s) != 0 && report.isotropic) {
        report.isotropic = false;
        report.isotropy_witness = std::make_pair(roots[r], roots[s]);
      }
    }
  }
  report.codimension = static_cast<int>(roots.size() - inside.size());
  report.expected_codimension = static_cast<int>(mp.m.size());
  report.form_rank = rank(form);
  // An isotropic subspace has codimension at least rank/2, with equality
  // exactly when it is maximal.
  report.maximal = report.isotropic && report.form_rank == 2 * report.codimension;
  report.subalgebra_witness = subalgebra_witness(d);
  return report;
}

int Sampler::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Rational Sampler::nonzero_rational() {
  const int num = uniform(1, spec_.bound) * (uniform(0, 1) ? 1 : -1);
  return Rational(num, uniform(1, spec_.bound));
}

Matrix<Rational> Sampler::borel(int n, Scope scope) {
  Matrix<Rational> b = Matrix<Rational>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = scope == Scope::Unipotent ? 1 : uniform(1, spec_.bound);
    for (int j = i + 1; j < n; ++j) b(i, j) = uniform(-spec_.bound, spec_.bound);
  }
  return b;
}

ScalarAssignment Sampler::scalars(const RookPlacement& d) {
  std::map<Cell, Rational> values;
  for (const Cell& c : d) values.emplace(c, nonzero_rational());
  return ScalarAssignment(d, std::move(values));
}

Matrix<Rational> sample_borel(int n, RandomSpec spec, Scope scope) {
  return Sampler(spec).borel(n, scope);
}

}  // namespace rooks
