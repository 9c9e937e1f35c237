#pragma once

// Scans over primes, mergeable partial-sum accumulators and the empirical
// checks built on them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmif/eccurve.hpp"
#include "cmif/frobenius.hpp"
#include "cmif/modarith.hpp"
#include "cmif/quadorder.hpp"

namespace cmif {

using Rational = boost::multiprecision::cpp_rational;

struct Checkpoint {
    std::uint64_t x = 0;
    u128 sum_dp = 0;
    u128 sum_ep = 0;
    std::uint64_t pi_x = 0;  // primes <= x seen, bad ones included

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Partial sums over a set of primes. Accumulators built over disjoint prime
/// sets with the same checkpoint list merge into the accumulator of the union.
struct SumAccumulator {
    std::uint64_t x_processed = 0;
    u128 sum_dp = 0;
    u128 sum_ep = 0;
    std::uint64_t count_ordinary = 0;
    std::uint64_t count_ss = 0;
    std::uint64_t count_small = 0;
    std::uint64_t count_bad = 0;
    std::map<std::uint64_t, std::uint64_t> hist_dp;  // good primes only
    std::vector<Checkpoint> checkpoints;

    SumAccumulator() = default;
    explicit SumAccumulator(std::span<const std::uint64_t> checkpoint_xs);

    [[nodiscard]] std::uint64_t count_good() const { return count_ordinary + count_ss + count_small; }
    [[nodiscard]] std::uint64_t count_primes() const { return count_good() + count_bad; }

    void add(const PrimeRecord& r);
    /// Throws std::invalid_argument when the checkpoint lists differ.
    void merge(const SumAccumulator& other);

    friend bool operator==(const SumAccumulator&, const SumAccumulator&) = default;
};

inline constexpr std::size_t kScanChunkPrimes = std::size_t{1} << 16;

struct ScanOptions {
    std::uint64_t x_min = 2;
    std::uint64_t x_max = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> checkpoints;
    unsigned workers = 1;
};

using RecordSink = std::function<void(const PrimeRecord&)>;

/// Folds dp_ep over the primes of [x_min, x_max]. Primes are cut into chunks
/// of kScanChunkPrimes; chunk i draws its points from a generator seeded by
/// (seed, i), so results do not depend on the worker count. Records reach the
/// sink in increasing p. AmbiguousFrobenius propagates.
SumAccumulator scan(const CmCurve& curve, const ScanOptions& opts, const RecordSink& sink = {});

/// Seed of the point generator for one chunk.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

struct DecompositionResult {
    u128 lhs = 0;  // sum of d_p over good p <= x
    u128 rhs = 0;  // sum over d <= 2 sqrt(x) of phi(d) #{good p <= x : d | d_p}
    [[nodiscard]] bool equal() const { return lhs == rhs; }
};

DecompositionResult decomposition_check(std::span<const PrimeRecord> records, std::uint64_t x);
DecompositionResult decomposition_check(const CmCurve& curve, std::uint64_t x, std::uint64_t seed);

struct BtResult {
    std::uint64_t count = 0;
    std::uint64_t phi_mu = 0;
    std::uint64_t norm_mu = 0;
    double ratio = 0.0;  // count * Phi(mu) * log(x / Nm mu) / x
};

/// Prime elements pi of the maximal order with Nm(pi) <= x and pi = alpha
/// (mod mu). Associates count as distinct elements. Requires (mu), (alpha)
/// comaximal and Nm(mu) < x; std::domain_error otherwise.
BtResult bt_counter(std::uint64_t x, const QuadInt& mu, const QuadInt& alpha);
double bt_ratio(std::uint64_t x, const QuadInt& mu, const QuadInt& alpha);

inline constexpr std::uint64_t kExactSumLimit = 2000;

struct SchurResult {
    std::uint64_t t = 0;
    long double value = 0;           // sum_{m <= t} (m / phi(m))^4
    std::optional<Rational> exact;   // for t <= kExactSumLimit
    [[nodiscard]] long double per_t() const { return value / static_cast<long double>(t); }
};

SchurResult schur_sum(std::uint64_t t);

struct WintnerResult {
    std::uint64_t z = 0;
    long double sum = 0;             // sum_{d <= Z} mu^2(d) phi(d) / d^2
    std::optional<Rational> exact;   // for Z <= kExactSumLimit
    long double slope = 0;           // sum / log Z
};

WintnerResult wintner_slope(std::uint64_t z);

/// A nonnegative multiplicative function, evaluated on squarefree arguments
/// from its values at primes. Primes without an entry map to 0.
struct PrimeValues {
    std::map<std::uint64_t, Rational> at_prime;
    [[nodiscard]] Rational at(std::uint64_t p) const;
};

struct TrivlemResult {
    Rational lhs;  // sum_{n <= t, (n,k) = 1} mu^2(n) g(n)
    Rational rhs;  // prod_{p | k} (1 + g(p))^-1 * sum_{n <= t} mu^2(n) g(n)
    [[nodiscard]] bool holds() const { return lhs >= rhs; }
};

TrivlemResult trivlem_check(const PrimeValues& g, std::uint64_t k, std::uint64_t t);

struct TrivlemSuiteResult {
    std::uint64_t trials = 0;
    std::uint64_t held = 0;
};

/// Random instances: k <= 100, t <= 1000, g(p) a random rational in [0, 2].
TrivlemSuiteResult trivlem_random_suite(std::uint64_t trials, std::uint64_t seed);

struct DukeRow {
    std::uint64_t x = 0;
    std::uint64_t threshold = 0;
    std::uint64_t exceed = 0;  // good p <= x with d_p > threshold
    std::uint64_t good = 0;
    [[nodiscard]] double fraction() const { return good ? static_cast<double>(exceed) / static_cast<double>(good) : 0.0; }
};

std::vector<DukeRow> duke_tail(std::span<const PrimeRecord> records, std::span<const std::uint64_t> thresholds,
                               std::span<const std::uint64_t> xs);

/// Li(x) = integral from 2 to x of dt / log t, by adaptive Gauss-Kronrod
/// quadrature in the variable u = log t (relative error well below 1e-9).
double log_integral(double x);

}  // namespace cmif
