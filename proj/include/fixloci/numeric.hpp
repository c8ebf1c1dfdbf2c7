#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fixloci {

// Exact arithmetic only. Coefficients are arbitrary-precision integers;
// lattice reductions use arbitrary-precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace fixloci
