#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace logmot {

// All coefficient arithmetic in the library is exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace logmot
