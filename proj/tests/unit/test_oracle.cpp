#include <gtest/gtest.h>

#include <numeric>

#include "cmif/oracle.hpp"
#include "cmif/primesieve.hpp"

using namespace cmif;

namespace {

// Order of P by repeated addition.
std::uint64_t naive_order(const CurveModP& E, const Point& P) {
    std::uint64_t k = 1;
    for (Point Q = P; !Q.infinity; Q = E.add(Q, P)) ++k;
    return k;
}

}  // namespace

TEST(Oracle, EnumerationOrderAndCount) {
    const CmCurve& c = find_curve(builtin_curves(), "j1728-D4");
    const auto pts = enumerate_points(c, 5);
    ASSERT_EQ(pts.size(), 8U);
    EXPECT_TRUE(pts[0].infinity);
    for (std::size_t i = 2; i < pts.size(); ++i) {
        EXPECT_TRUE(pts[i - 1].x < pts[i].x || (pts[i - 1].x == pts[i].x && pts[i - 1].y < pts[i].y));
    }
    EXPECT_THROW((void)enumerate_points(c, 2), std::domain_error);
    EXPECT_THROW((void)enumerate_points(c, 100003), std::domain_error);
}

TEST(Oracle, SmallExamples) {
    const CmCurve& c = find_curve(builtin_curves(), "j1728-D4");
    const GroupStructure g5 = group_structure(c, 5);
    EXPECT_EQ(g5.n, 8U);
    EXPECT_EQ(g5.d, 2U);
    EXPECT_EQ(g5.e, 4U);
    const GroupStructure g17 = group_structure(c, 17);
    EXPECT_EQ(g17.n, 16U);
    EXPECT_EQ(g17.d, 4U);
    EXPECT_EQ(g17.e, 4U);
    const GroupStructure g3 = group_structure(c, 3);
    EXPECT_EQ(g3.n, 4U);
    EXPECT_EQ(g3.d, 2U);
}

TEST(Oracle, ExponentIsLcmOfNaiveOrders) {
    for (const auto& c : builtin_curves()) {
        for (std::uint64_t p : primes_upto(200)) {
            if (c.is_bad(p)) continue;
            const CurveModP E(c, p);
            const auto pts = enumerate_points(E);
            std::uint64_t e = 1;
            for (const Point& P : pts) {
                const std::uint64_t k = naive_order(E, P);
                EXPECT_EQ(element_order(E, P, pts.size()), k);
                e = std::lcm(e, k);
            }
            const GroupStructure g = group_structure(E);
            EXPECT_EQ(g.n, pts.size()) << c.label << " p=" << p;
            EXPECT_EQ(g.e, e) << c.label << " p=" << p;
            EXPECT_EQ(g.d * g.e, g.n);
            EXPECT_EQ(g.e % g.d, 0U);
        }
    }
}
