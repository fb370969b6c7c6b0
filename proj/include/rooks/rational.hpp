#pragma once

#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace rooks {

// Expression templates are switched off so that Eigen's own expression
// machinery sees plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;

/// "p/q" in lowest terms; integers print without a denominator.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace rooks
