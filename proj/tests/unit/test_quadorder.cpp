#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "cmif/quadorder.hpp"

using namespace cmif;

namespace {

// Complex embedding of a + b*beta, independent of the multiplication table.
std::complex<double> embed(const QuadInt& x) {
    const OrderDesc& o = x.order();
    const std::complex<double> root(0.0, std::sqrt(static_cast<double>(-o.g)));
    const std::complex<double> omega = (o.g % 4 == -3 || o.g % 4 == 1) ? (1.0 + root) / 2.0 : root;
    return static_cast<double>(x.a()) + static_cast<double>(x.b()) * static_cast<double>(o.f) * omega;
}

QuadInt random_element(std::mt19937_64& rng, const OrderDesc& o, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    return {dist(rng), dist(rng), o};
}

bool brute_divides(const QuadInt& mu, const QuadInt& x, int range) {
    for (int a = -range; a <= range; ++a)
        for (int b = -range; b <= range; ++b)
            if (mu * QuadInt(a, b, mu.order()) == x) return true;
    return false;
}

}  // namespace

TEST(QuadOrder, RegistryHasThirteenOrders) {
    const auto all = class_number_one_orders();
    ASSERT_EQ(all.size(), 13U);
    EXPECT_EQ(maximal_orders().size(), 9U);
    for (const auto& o : maximal_orders()) EXPECT_TRUE(o.is_maximal());
    std::vector<std::int64_t> discs;
    for (const auto& o : all) discs.push_back(o.discriminant());
    std::sort(discs.begin(), discs.end());
    const std::vector<std::int64_t> want{-163, -67, -43, -28, -27, -19, -16, -12, -11, -8, -7, -4, -3};
    EXPECT_EQ(discs, want);
    EXPECT_EQ(order_for(-3, 1).w, 6);
    EXPECT_EQ(order_for(-1, 1).w, 4);
    EXPECT_EQ(order_for(-3, 2).w, 2);
    EXPECT_THROW((void)order_for(-5, 1), std::invalid_argument);
}

TEST(QuadOrder, ProductMatchesComplexEmbedding) {
    std::mt19937_64 rng(3);
    for (const auto& o : class_number_one_orders()) {
        for (int i = 0; i < 200; ++i) {
            const QuadInt x = random_element(rng, o, 50), y = random_element(rng, o, 50);
            const auto z = embed(x * y), want = embed(x) * embed(y);
            EXPECT_NEAR(z.real(), want.real(), 1e-6) << o.name();
            EXPECT_NEAR(z.imag(), want.imag(), 1e-6) << o.name();
            EXPECT_NEAR(std::abs(embed(x + y) - (embed(x) + embed(y))), 0.0, 1e-9);
        }
    }
}

TEST(QuadOrder, NormTraceConjugate) {
    std::mt19937_64 rng(4);
    for (const auto& o : class_number_one_orders()) {
        for (int i = 0; i < 200; ++i) {
            const QuadInt x = random_element(rng, o, 1000), y = random_element(rng, o, 1000);
            EXPECT_NEAR(static_cast<double>(norm(x)), std::norm(embed(x)), 1e-6 * (1 + std::norm(embed(x))));
            EXPECT_NEAR(static_cast<double>(trace(x)), 2 * embed(x).real(), 1e-6);
            EXPECT_EQ(norm(x * y), norm(x) * norm(y));
            EXPECT_EQ(x * conj(x), QuadInt(static_cast<std::int64_t>(norm(x)), 0, o));
            EXPECT_EQ(conj(conj(x)), x);
        }
    }
}

TEST(QuadOrder, OverflowRaises) {
    const auto& o = order_for(-1, 1);
    const QuadInt big(INT64_MAX / 2, INT64_MAX / 2, o);
    EXPECT_THROW((void)(big * big), std::range_error);
}

TEST(QuadOrder, Content) {
    const auto& o = order_for(-1, 1);
    EXPECT_EQ(content(QuadInt(6, 4, o)), 2U);
    EXPECT_EQ(content(QuadInt(-9, 0, o)), 9U);
    EXPECT_THROW((void)content(QuadInt(0, 0, o)), std::domain_error);
}

TEST(QuadOrder, DividesAgreesWithSearch) {
    std::mt19937_64 rng(5);
    for (const auto& o : class_number_one_orders()) {
        for (int i = 0; i < 40; ++i) {
            const QuadInt mu = random_element(rng, o, 3);
            if (mu.is_zero()) continue;
            const QuadInt x = random_element(rng, o, 12);
            EXPECT_EQ(divides(mu, x), brute_divides(mu, x, 20)) << o.name();
            EXPECT_TRUE(divides(mu, mu * random_element(rng, o, 5)));
        }
    }
}

TEST(QuadOrder, KroneckerSymbol) {
    for (const auto& o : maximal_orders()) {
        for (std::uint64_t p = 3; p < 400; p += 2) {
            bool prime = true;
            for (std::uint64_t q = 3; q * q <= p; q += 2) prime = prime && p % q != 0;
            if (!prime) continue;
            const std::int64_t r = ((o.delta % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                   static_cast<std::int64_t>(p);
            int euler = 0;
            if (r != 0) {
                std::uint64_t acc = 1;
                for (std::uint64_t k = 0; k < (p - 1) / 2; ++k) acc = acc * static_cast<std::uint64_t>(r) % p;
                euler = acc == 1 ? 1 : -1;
            }
            EXPECT_EQ(kronecker(o.delta, p), euler) << o.delta << " " << p;
        }
        const std::int64_t m8 = ((o.delta % 8) + 8) % 8;
        const int want2 = o.delta % 2 == 0 ? 0 : (m8 == 1 || m8 == 7 ? 1 : -1);
        EXPECT_EQ(kronecker(o.delta, 2), want2);
        EXPECT_EQ(kronecker(o.delta, 1), 1);
    }
}

TEST(QuadOrder, PhiIdealExamples) {
    const auto& gauss = order_for(-1, 1);
    EXPECT_EQ(phi_ideal(1, gauss), 1U);
    EXPECT_EQ(phi_ideal(3, gauss), 8U);
    EXPECT_EQ(phi_ideal(5, gauss), 16U);
    EXPECT_EQ(phi_ideal(2, gauss), 2U);
    EXPECT_THROW((void)phi_ideal(3, order_for(-1, 2)), std::invalid_argument);
}

TEST(QuadOrder, PhiIdealMatchesResidueCount) {
    for (const auto& o : maximal_orders()) {
        for (std::uint64_t d = 1; d <= 60; ++d) {
            std::uint64_t units_mod_d = 0;
            for (std::uint64_t a = 0; a < d; ++a)
                for (std::uint64_t b = 0; b < d; ++b) {
                    const QuadInt x(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), o);
                    if (std::gcd(static_cast<std::uint64_t>(norm(x) % d), d) == 1 || d == 1) ++units_mod_d;
                }
            EXPECT_EQ(phi_ideal(d, o), units_mod_d) << o.name() << " d=" << d;
        }
    }
}

TEST(QuadOrder, PhiElementMatchesResidueCount) {
    std::mt19937_64 rng(6);
    for (const auto& o : maximal_orders()) {
        for (int i = 0; i < 6; ++i) {
            const QuadInt mu = random_element(rng, o, 2);
            if (mu.is_zero()) continue;
            const auto n = static_cast<std::int64_t>(norm(mu));
            if (n > 20) continue;
            // The box [0,n)^2 covers every class of O/(mu) exactly n times.
            std::uint64_t invertible = 0;
            for (std::int64_t a = 0; a < n; ++a)
                for (std::int64_t b = 0; b < n; ++b) {
                    const QuadInt x(a, b, o);
                    bool found = false;
                    for (std::int64_t c = 0; c < n && !found; ++c)
                        for (std::int64_t e = 0; e < n && !found; ++e)
                            found = divides(mu, x * QuadInt(c, e, o) - QuadInt(1, 0, o));
                    if (found) ++invertible;
                }
            EXPECT_EQ(phi_element(mu), invertible / static_cast<std::uint64_t>(n)) << o.name();
        }
    }
}

TEST(QuadOrder, PhiDominatesSquaredTotient) {
    for (const auto& o : maximal_orders()) {
        for (std::uint64_t d = 1; d <= 500; ++d) {
            std::uint64_t phi = 0;
            for (std::uint64_t k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
            EXPECT_GE(phi_ideal(d, o), phi * phi);
        }
    }
}

TEST(QuadOrder, RepCountExamples) {
    const auto& gauss = order_for(-1, 1);
    EXPECT_EQ(rep_count(5, gauss), 8U);
    EXPECT_EQ(rep_count(3, gauss), 0U);
    EXPECT_EQ(rep_count(1, gauss), 4U);
    EXPECT_EQ(rep_count(25, gauss), 12U);
}

TEST(QuadOrder, RepCountMatchesLatticeCount) {
    for (const auto& o : maximal_orders()) {
        const auto hist = rep_counts_bruteforce_upto(2000, o);
        for (std::uint64_t m = 1; m <= 2000; ++m) {
            ASSERT_EQ(rep_count(m, o), hist[m]) << o.name() << " m=" << m;
        }
        for (std::uint64_t m : {1U, 7U, 49U, 210U, 1999U}) EXPECT_EQ(rep_count_bruteforce(m, o), hist[m]);
    }
}

TEST(QuadOrder, Units) {
    for (const auto& o : class_number_one_orders()) {
        const auto us = units(o);
        EXPECT_EQ(static_cast<int>(us.size()), o.w) << o.name();
        for (const auto& u : us) {
            EXPECT_EQ(norm(u), 1U);
            for (const auto& v : us) EXPECT_NE(std::find(us.begin(), us.end(), u * v), us.end());
        }
    }
}

TEST(QuadOrder, Comaximal) {
    const auto& gauss = order_for(-1, 1);
    EXPECT_TRUE(comaximal(QuadInt(3, 0, gauss), QuadInt(1, 0, gauss)));
    EXPECT_FALSE(comaximal(QuadInt(2, 0, gauss), QuadInt(1, 1, gauss)));
    EXPECT_TRUE(comaximal(QuadInt(2, 1, gauss), QuadInt(2, -1, gauss)));  // (2+i), (2-i)
    EXPECT_FALSE(comaximal(QuadInt(5, 0, gauss), QuadInt(2, 1, gauss)));
    std::mt19937_64 rng(7);
    for (const auto& o : maximal_orders()) {
        for (int i = 0; i < 30; ++i) {
            const QuadInt mu = random_element(rng, o, 2), alpha = random_element(rng, o, 6);
            if (mu.is_zero()) continue;
            const auto n = static_cast<std::int64_t>(norm(mu));
            if (n > 15) continue;
            bool unit_mod_mu = false;
            for (std::int64_t c = 0; c < n && !unit_mod_mu; ++c)
                for (std::int64_t e = 0; e < n && !unit_mod_mu; ++e)
                    unit_mod_mu = divides(mu, alpha * QuadInt(c, e, o) - QuadInt(1, 0, o));
            EXPECT_EQ(comaximal(mu, alpha), unit_mod_mu || n == 1) << o.name();
        }
    }
}
