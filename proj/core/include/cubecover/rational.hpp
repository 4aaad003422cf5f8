#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubecover {

// All density budgets are computed in exact rational arithmetic. Floating
// point never enters a comparison; it only appears in human-readable echoes.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Threshold convention for density feasibility tests against 1.
/// Weak mirrors a printed ">=", Strict a ">". Equality cases do occur
/// (e.g. a binomial value landing exactly on 1), so the mode matters.
enum class ComparisonMode { Weak, Strict };

inline bool clears_one(const Rational& value, ComparisonMode mode) {
  return mode == ComparisonMode::Weak ? value >= 1 : value > 1;
}

/// "p/q" with q omitted when 1. Exact; safe to re-parse.
inline std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cubecover
