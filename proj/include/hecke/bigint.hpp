#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

// Coefficients are exact arbitrary-precision integers: elimination chains
// and series inversion can leave machine-word range for large exponents.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hecke
