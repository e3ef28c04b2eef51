#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toppcomb {

// Exact integer type for enumeration results and polynomial coefficients.
using Count = boost::multiprecision::cpp_int;

}
