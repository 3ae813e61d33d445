#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubics {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T> using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T> using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Int to_int(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_int: " + q.str() + " is not an integer");
  return numerator(q);
}

inline std::int64_t to_i64(const Rational& q) { return static_cast<std::int64_t>(to_int(q)); }

}  // namespace cubics
