#include "cmif/oracle.hpp"

#include <stdexcept>
#include <string>

namespace cmif {
namespace {

CurveModP checked_curve(const CmCurve& curve, std::uint64_t p) {
    if (curve.is_bad(p)) throw std::domain_error("oracle: bad reduction at p=" + std::to_string(p));
    return CurveModP(curve, p);
}

}  // namespace

std::vector<Point> enumerate_points(const CurveModP& E) {
    const std::uint64_t p = E.p();
    if (p > kOracleMaxPrime) throw std::domain_error("oracle: p exceeds enumeration bound");
    std::vector<std::uint64_t> root(p, 0);  // smaller square root, 0 for none
    for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) root[mulmod(y, y, p)] = y;
    std::vector<Point> pts{Point::at_infinity()};
    pts.reserve(p + 2 * isqrt(p) + 2);
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t r = E.rhs(x);
        if (r == 0) {
            pts.push_back(Point::affine(x, 0));
        } else if (root[r] != 0) {
            pts.push_back(Point::affine(x, root[r]));
            pts.push_back(Point::affine(x, p - root[r]));
        }
    }
    return pts;
}

std::vector<Point> enumerate_points(const CmCurve& curve, std::uint64_t p) {
    return enumerate_points(checked_curve(curve, p));
}

GroupStructure group_structure(const CurveModP& E) {
    const std::vector<Point> pts = enumerate_points(E);
    const std::uint64_t n = pts.size();
    const std::uint64_t p = E.p();
    std::vector<std::int64_t> first_at_x(p, -1);
    for (std::size_t i = pts.size(); i-- > 1;) first_at_x[pts[i].x] = static_cast<std::int64_t>(i);
    auto index_of = [&](const Point& Q) -> std::size_t {
        if (Q.infinity) return 0;
        const auto i = static_cast<std::size_t>(first_at_x[Q.x]);
        return pts[i].y == Q.y ? i : i + 1;
    };

    std::vector<std::uint64_t> order(n, 0);
    order[0] = 1;
    std::uint64_t exponent = 1;
    std::vector<std::size_t> walk;
    for (std::size_t i = 1; i < n && exponent != n; ++i) {
        if (order[i] != 0) continue;
        walk.clear();
        Point Q = pts[i];
        while (!Q.infinity) {
            walk.push_back(index_of(Q));
            Q = E.add_unchecked(Q, pts[i]);
        }
        const std::uint64_t len = walk.size() + 1;
        for (std::size_t k = 0; k < walk.size(); ++k) {
            auto& o = order[walk[k]];
            if (o == 0) o = len / gcd_u64(k + 1, len);
        }
        exponent = lcm_u64(exponent, len);
    }
    return {n, n / exponent, exponent};
}

GroupStructure group_structure(const CmCurve& curve, std::uint64_t p) {
    return group_structure(checked_curve(curve, p));
}

std::uint64_t element_order(const CurveModP& E, const Point& P, std::uint64_t n) {
    if (!E.scalar_mul(n, P).infinity) throw std::invalid_argument("element_order: n does not annihilate P");
    std::uint64_t ord = n;
    std::uint64_t rest = n;
    auto strip = [&](std::uint64_t q) {
        while (rest % q == 0) rest /= q;
        while (ord % q == 0 && E.scalar_mul_unchecked(ord / q, P).infinity) ord /= q;
    };
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q == 0) strip(q);
    }
    if (rest > 1) strip(rest);
    return ord;
}

}  // namespace cmif
