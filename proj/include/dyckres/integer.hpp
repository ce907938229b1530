#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dyckres {

// Exact integer used for every dimension, multiplicity and coefficient.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

inline Integer binomial(int top, int bottom)
{
    if (bottom < 0 || top < 0 || bottom > top)
        return 0;
    Integer result = 1;
    for (int i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i;
    }
    return result;
}

} // namespace dyckres
