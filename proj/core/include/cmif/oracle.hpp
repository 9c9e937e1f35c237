#pragma once

// Brute-force ground truth for small p: enumerate E(F_p) and read off its
// invariant factors from the orders of all of its elements.

#include <cstdint>
#include <vector>

#include "cmif/eccurve.hpp"

namespace cmif {

inline constexpr std::uint64_t kOracleMaxPrime = 100000;

struct GroupStructure {
    std::uint64_t n = 0;  // #E(F_p)
    std::uint64_t d = 0;  // first invariant factor
    std::uint64_t e = 0;  // exponent
};

/// Infinity followed by the affine points in increasing x (smaller y first).
/// Throws std::domain_error for p bad for the model or p > kOracleMaxPrime.
std::vector<Point> enumerate_points(const CmCurve& curve, std::uint64_t p);
std::vector<Point> enumerate_points(const CurveModP& E);

/// E(F_p) = Z/d + Z/e with d | e. The exponent is the lcm of the exact orders
/// of all points, found by walking cyclic subgroups until every point has a
/// known order (or one point already has order N).
GroupStructure group_structure(const CmCurve& curve, std::uint64_t p);
GroupStructure group_structure(const CurveModP& E);

/// Order of P given a multiple n of it, by stripping prime factors of n.
std::uint64_t element_order(const CurveModP& E, const Point& P, std::uint64_t n);

}  // namespace cmif
