#include "cmif/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cmif/cornacchia.hpp"
#include "cmif/primesieve.hpp"

namespace cmif {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

struct ChunkResult {
    std::vector<PrimeRecord> records;
    SumAccumulator acc;
    std::exception_ptr error;
};

void run_chunk(const CmCurve& curve, const std::vector<std::uint64_t>& primes, std::uint64_t seed,
               std::uint64_t index, ChunkResult& out) {
    try {
        std::mt19937_64 rng(chunk_seed(seed, index));
        out.records.reserve(primes.size());
        for (std::uint64_t p : primes) {
            out.records.push_back(dp_ep(p, curve, rng));
            out.acc.add(out.records.back());
        }
    } catch (...) {
        out.error = std::current_exception();
    }
}

// Neumaier-compensated running sum.
struct CompensatedSum {
    long double sum = 0;
    long double carry = 0;
    void add(long double v) {
        const long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    [[nodiscard]] long double value() const { return sum + carry; }
};

}  // namespace

SumAccumulator::SumAccumulator(std::span<const std::uint64_t> checkpoint_xs) {
    std::vector<std::uint64_t> xs(checkpoint_xs.begin(), checkpoint_xs.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (auto x : xs) checkpoints.push_back({x, 0, 0, 0});
}

void SumAccumulator::add(const PrimeRecord& r) {
    x_processed = std::max(x_processed, r.p);
    switch (r.kind) {
        case ReductionKind::Bad: ++count_bad; break;
        case ReductionKind::GoodOrdinary: ++count_ordinary; break;
        case ReductionKind::GoodSupersingular: ++count_ss; break;
        case ReductionKind::GoodSmall: ++count_small; break;
    }
    if (r.good()) {
        sum_dp += r.d;
        sum_ep += r.e;
        ++hist_dp[r.d];
    }
    for (auto it = checkpoints.rbegin(); it != checkpoints.rend() && it->x >= r.p; ++it) {
        it->sum_dp += r.d;
        it->sum_ep += r.e;
        ++it->pi_x;
    }
}

void SumAccumulator::merge(const SumAccumulator& other) {
    if (checkpoints.size() != other.checkpoints.size()) {
        throw std::invalid_argument("merge: accumulators have different checkpoints");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i].x != other.checkpoints[i].x) {
            throw std::invalid_argument("merge: accumulators have different checkpoints");
        }
    }
    x_processed = std::max(x_processed, other.x_processed);
    sum_dp += other.sum_dp;
    sum_ep += other.sum_ep;
    count_ordinary += other.count_ordinary;
    count_ss += other.count_ss;
    count_small += other.count_small;
    count_bad += other.count_bad;
    for (auto [d, c] : other.hist_dp) hist_dp[d] += c;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        checkpoints[i].sum_dp += other.checkpoints[i].sum_dp;
        checkpoints[i].sum_ep += other.checkpoints[i].sum_ep;
        checkpoints[i].pi_x += other.checkpoints[i].pi_x;
    }
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    return splitmix64(seed ^ splitmix64(chunk_index));
}

SumAccumulator scan(const CmCurve& curve, const ScanOptions& opts, const RecordSink& sink) {
    if (opts.x_max < 2) throw std::invalid_argument("scan: x_max must be at least 2");
    const unsigned workers = std::max(1U, opts.workers);
    SumAccumulator total(opts.checkpoints);

    SegmentedSieve sieve(PrimeRange{opts.x_min, opts.x_max});
    std::vector<std::uint64_t> segment;
    std::vector<std::vector<std::uint64_t>> batch(1);
    std::uint64_t next_chunk = 0;

    auto flush = [&]() {
        std::vector<ChunkResult> results(batch.size());
        for (auto& r : results) r.acc = SumAccumulator(opts.checkpoints);
        if (batch.size() == 1) {
            run_chunk(curve, batch[0], opts.seed, next_chunk, results[0]);
        } else {
            std::vector<std::jthread> threads;
            threads.reserve(batch.size());
            for (std::size_t i = 0; i < batch.size(); ++i) {
                threads.emplace_back([&, i] { run_chunk(curve, batch[i], opts.seed, next_chunk + i, results[i]); });
            }
        }
        for (auto& r : results) {
            if (r.error) std::rethrow_exception(r.error);
            if (sink) {
                for (const auto& rec : r.records) sink(rec);
            }
            total.merge(r.acc);
        }
        next_chunk += batch.size();
        batch.assign(1, {});
    };

    while (sieve.next_segment(segment)) {
        for (std::uint64_t p : segment) {
            batch.back().push_back(p);
            if (batch.back().size() == kScanChunkPrimes) {
                if (batch.size() == workers) {
                    flush();
                } else {
                    batch.emplace_back();
                }
            }
        }
    }
    if (batch.back().empty()) batch.pop_back();
    if (!batch.empty()) flush();
    total.x_processed = std::max(total.x_processed, opts.x_max);
    return total;
}

DecompositionResult decomposition_check(std::span<const PrimeRecord> records, std::uint64_t x) {
    DecompositionResult res;
    const std::uint64_t bound = isqrt(4 * x);  // floor(2 sqrt x)
    std::vector<std::uint64_t> hist(bound + 1, 0);
    for (const auto& r : records) {
        if (!r.good() || r.p > x) continue;
        res.lhs += r.d;
        if (r.d <= bound) ++hist[r.d];
    }
    if (bound == 0) return res;
    const SpfTable spf(std::max<std::uint64_t>(bound, 2));
    for (std::uint64_t d = 1; d <= bound; ++d) {
        std::uint64_t divisible = 0;
        for (std::uint64_t m = d; m <= bound; m += d) divisible += hist[m];
        res.rhs += static_cast<u128>(spf.euler_phi(d)) * divisible;
    }
    return res;
}

DecompositionResult decomposition_check(const CmCurve& curve, std::uint64_t x, std::uint64_t seed) {
    std::vector<PrimeRecord> records;
    ScanOptions opts;
    opts.x_max = x;
    opts.seed = seed;
    scan(curve, opts, [&](const PrimeRecord& r) { records.push_back(r); });
    return decomposition_check(records, x);
}

BtResult bt_counter(std::uint64_t x, const QuadInt& mu, const QuadInt& alpha) {
    const OrderDesc& order = mu.order();
    if (!order.is_maximal()) throw std::domain_error("bt_counter: maximal orders only");
    if (!(alpha.order() == order)) throw std::domain_error("bt_counter: mu and alpha in different orders");
    if (mu.is_zero()) throw std::domain_error("bt_counter: mu must be nonzero");
    if (!comaximal(mu, alpha)) throw std::domain_error("bt_counter: (mu) and (alpha) are not comaximal");
    BtResult res;
    res.norm_mu = static_cast<std::uint64_t>(norm(mu));
    if (res.norm_mu >= x) throw std::domain_error("bt_counter: Nm(mu) must be below x");
    res.phi_mu = phi_element(mu);

    const std::vector<QuadInt> us = units(order);
    auto tally = [&](const QuadInt& pi) {
        for (const QuadInt& u : us) {
            if (divides(mu, u * pi - alpha)) ++res.count;
        }
    };
    for (std::uint64_t p : primes_upto(x)) {
        switch (splitting_type(p, order)) {
            case SplittingType::Split: {
                const QuadInt pi = *find_norm_element(p, order);
                tally(pi);
                tally(conj(pi));
                break;
            }
            case SplittingType::Ramified:
                tally(*find_norm_element(p, order));
                break;
            case SplittingType::Inert:
                if (p <= x / p) tally(QuadInt(static_cast<std::int64_t>(p), 0, order));
                break;
        }
    }
    const double xd = static_cast<double>(x);
    res.ratio = static_cast<double>(res.count) * static_cast<double>(res.phi_mu) *
                std::log(xd / static_cast<double>(res.norm_mu)) / xd;
    return res;
}

double bt_ratio(std::uint64_t x, const QuadInt& mu, const QuadInt& alpha) { return bt_counter(x, mu, alpha).ratio; }

SchurResult schur_sum(std::uint64_t t) {
    if (t == 0) throw std::domain_error("schur_sum: t must be positive");
    SchurResult res;
    res.t = t;
    const SpfTable spf(std::max<std::uint64_t>(t, 2));
    const bool exact = t <= kExactSumLimit;
    Rational q = 0;
    CompensatedSum sum;
    for (std::uint64_t m = 1; m <= t; ++m) {
        long double ratio = 1;
        Rational rq = 1;
        for (auto [p, k] : spf.factorize(m)) {
            ratio *= static_cast<long double>(p) / static_cast<long double>(p - 1);
            if (exact) rq *= Rational(p, p - 1);
        }
        const long double r2 = ratio * ratio;
        sum.add(r2 * r2);
        if (exact) q += rq * rq * rq * rq;
    }
    res.value = sum.value();
    if (exact) res.exact = q;
    return res;
}

WintnerResult wintner_slope(std::uint64_t z) {
    if (z < 2) throw std::domain_error("wintner_slope: Z must be at least 2");
    WintnerResult res;
    res.z = z;
    const SpfTable spf(z);
    const bool exact = z <= kExactSumLimit;
    Rational q = 0;
    CompensatedSum sum;
    for (std::uint64_t d = 1; d <= z; ++d) {
        if (spf.moebius_sq(d) == 0) continue;
        const std::uint64_t phi = spf.euler_phi(d);
        const long double dd = static_cast<long double>(d);
        sum.add(static_cast<long double>(phi) / (dd * dd));
        if (exact) q += Rational(phi, d * d);
    }
    res.sum = sum.value();
    res.slope = res.sum / std::log(static_cast<long double>(z));
    if (exact) res.exact = q;
    return res;
}

Rational PrimeValues::at(std::uint64_t p) const {
    auto it = at_prime.find(p);
    return it == at_prime.end() ? Rational(0) : it->second;
}

namespace {

TrivlemResult trivlem_with_table(const PrimeValues& g, std::uint64_t k, std::uint64_t t, const SpfTable& spf) {
    Rational all = 0, coprime = 0;
    for (std::uint64_t n = 1; n <= t; ++n) {
        Rational gn = 1;
        bool squarefree = true;
        for (auto [p, e] : spf.factorize(n)) {
            if (e > 1) {
                squarefree = false;
                break;
            }
            gn *= g.at(p);
        }
        if (!squarefree) continue;
        all += gn;
        if (gcd_u64(n, k) == 1) coprime += gn;
    }
    Rational factor = 1;
    for (auto [p, e] : spf.factorize(k)) factor *= 1 + g.at(p);
    return {coprime, all / factor};
}

}  // namespace

TrivlemResult trivlem_check(const PrimeValues& g, std::uint64_t k, std::uint64_t t) {
    if (k == 0 || t == 0) throw std::domain_error("trivlem_check: k and t must be positive");
    for (const auto& [p, v] : g.at_prime) {
        if (v < 0) throw std::domain_error("trivlem_check: g must be nonnegative");
    }
    const SpfTable spf(std::max<std::uint64_t>({k, t, 2}));
    return trivlem_with_table(g, k, t, spf);
}

TrivlemSuiteResult trivlem_random_suite(std::uint64_t trials, std::uint64_t seed) {
    constexpr std::uint64_t kMaxK = 100, kMaxT = 1000;
    const SpfTable spf(kMaxT);
    const std::vector<std::uint64_t> primes = primes_upto(kMaxT);
    std::mt19937_64 rng(seed);
    TrivlemSuiteResult res;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t k = 1 + uniform_below(rng, kMaxK);
        const std::uint64_t t = 1 + uniform_below(rng, kMaxT);
        PrimeValues g;
        for (std::uint64_t p : primes) {
            if (p > std::max(k, t)) break;
            const std::uint64_t den = 1 + uniform_below(rng, 12);
            const std::uint64_t num = uniform_below(rng, 2 * den + 1);
            g.at_prime[p] = Rational(num, den);
        }
        ++res.trials;
        if (trivlem_with_table(g, k, t, spf).holds()) ++res.held;
    }
    return res;
}

std::vector<DukeRow> duke_tail(std::span<const PrimeRecord> records, std::span<const std::uint64_t> thresholds,
                               std::span<const std::uint64_t> xs) {
    std::vector<DukeRow> rows;
    for (std::uint64_t x : xs) {
        for (std::uint64_t threshold : thresholds) {
            DukeRow row{x, threshold, 0, 0};
            for (const auto& r : records) {
                if (!r.good() || r.p > x) continue;
                ++row.good;
                if (r.d > threshold) ++row.exceed;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

double log_integral(double x) {
    if (x <= 2.0) {
        if (x < 2.0) throw std::domain_error("log_integral: x must be at least 2");
        return 0.0;
    }
    auto integrand = [](double u) { return std::exp(u) / u; };
    double err = 0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, std::log(2.0), std::log(x), 20, 1e-13, &err);
    return v;
}

}  // namespace cmif
