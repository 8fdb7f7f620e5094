#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qaffine {

// Exact integer type used for all polynomial coefficients.
using Int = boost::multiprecision::cpp_int;

inline bool divides_exactly(const Int& d, const Int& n, Int& quotient) {
    Int r;
    boost::multiprecision::divide_qr(n, d, quotient, r);
    return r == 0;
}

} // namespace qaffine
