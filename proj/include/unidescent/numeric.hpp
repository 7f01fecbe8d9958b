#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace unidescent {

// All engine arithmetic is exact. Character values, centralizer orders and
// factorials are arbitrary-precision integers; class-function pairings are
// exact rationals. No floating point anywhere in the computation paths.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

// Exact quotient; throws unidescent::error if b does not divide a.
Int exact_div(const Int& a, const Int& b);

}  // namespace unidescent
