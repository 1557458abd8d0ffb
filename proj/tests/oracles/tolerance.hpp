#pragma once

#include <algorithm>
#include <cmath>

namespace oracle {

// Relative error, with |expected| below `floor` compared absolutely. Used
// where closed forms pass through zero.
inline double rel_err(double got, double expected, double floor = 1e-300)
{
    return std::abs(got - expected) / std::max(std::abs(expected), floor);
}

inline bool close_rel(double got, double expected, double tol, double floor = 1e-300)
{
    return rel_err(got, expected, floor) <= tol;
}

} // namespace oracle
