#include <gtest/gtest.h>

#include <numeric>

#include "cmif/primesieve.hpp"

using namespace cmif;

namespace {

bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(PrimeSieve, CountBelowOneMillion) {
    EXPECT_EQ(primes_upto(1000000).size(), 78498U);
    EXPECT_EQ(primes_upto(10).size(), 4U);
    EXPECT_TRUE(primes_upto(1).empty());
    EXPECT_EQ(primes_upto(2), std::vector<std::uint64_t>{2});
}

TEST(PrimeSieve, MatchesTrialDivision) {
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = 0; n <= 30000; ++n)
        if (trial_prime(n)) want.push_back(n);
    EXPECT_EQ(primes_upto(30000), want);
}

TEST(PrimeSieve, SegmentBoundaries) {
    for (std::size_t seg : {1U, 2U, 7U, 64U, 1000U}) {
        for (std::uint64_t lo : {0U, 2U, 3U, 4U, 97U, 1000U}) {
            const PrimeRange r{lo, 5000, seg};
            std::vector<std::uint64_t> want;
            for (std::uint64_t n = lo; n <= 5000; ++n)
                if (trial_prime(n)) want.push_back(n);
            EXPECT_EQ(primes_in(r), want) << "seg=" << seg << " lo=" << lo;
        }
    }
}

TEST(PrimeSieve, HighWindow) {
    const std::uint64_t lo = 1000000000000ULL, hi = lo + 2000;
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (trial_prime(n)) want.push_back(n);
    EXPECT_EQ(primes_in({lo, hi}), want);
}

TEST(PrimeSieve, ForEachPrime) {
    std::uint64_t sum = 0;
    for_each_prime({2, 100}, [&](std::uint64_t p) { sum += p; });
    EXPECT_EQ(sum, 1060U);
}

TEST(SpfTable, ArithmeticFunctions) {
    const SpfTable t(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        std::uint64_t phi = 0, tau = 0;
        for (std::uint64_t k = 1; k <= n; ++k) {
            phi += std::gcd(k, n) == 1;
            tau += n % k == 0;
        }
        EXPECT_EQ(t.euler_phi(n), phi) << n;
        EXPECT_EQ(t.tau(n), tau) << n;
        bool squarefree = true;
        for (std::uint64_t q = 2; q * q <= n; ++q) squarefree = squarefree && n % (q * q) != 0;
        EXPECT_EQ(t.moebius_sq(n), squarefree ? 1 : 0) << n;

        std::uint64_t back = 1;
        for (auto [p, k] : t.factorize(n)) {
            EXPECT_TRUE(trial_prime(p));
            for (int i = 0; i < k; ++i) back *= p;
        }
        EXPECT_EQ(back, n);
        if (n > 1) {
            std::uint64_t spf = 2;
            while (n % spf != 0) ++spf;
            EXPECT_EQ(t.smallest_factor(n), spf);
        }
    }
    EXPECT_THROW((void)t.factorize(0), std::out_of_range);
    EXPECT_THROW((void)t.factorize(3001), std::out_of_range);
}
