#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qschubert {

// Exact structure constants. Quantum coefficients grow quickly with n, so
// no fixed-width integer is used on any accumulation path.
using Coefficient = boost::multiprecision::cpp_int;

}  // namespace qschubert
