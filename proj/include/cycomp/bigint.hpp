#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cycomp {

// All counting in this library is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace cycomp
