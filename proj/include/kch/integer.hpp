#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kch {

  // Arbitrary precision coefficients for group ring and polynomial arithmetic.
  using Integer = boost::multiprecision::cpp_int;

}  // namespace kch
