#include "cmif/primesieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cmif/modarith.hpp"

namespace cmif {

SegmentedSieve::SegmentedSieve(PrimeRange range) : range_(range) {
    if (range_.lo < 2) range_.lo = 2;
    if (range_.segment_size == 0) throw std::invalid_argument("segment_size must be positive");
    if (range_.hi < range_.lo) {
        done_ = true;
        next_lo_ = 0;
        return;
    }
    const std::uint64_t root = isqrt(range_.hi);
    std::vector<std::uint8_t> small(root + 1, 0);
    for (std::uint64_t i = 3; i <= root; i += 2) {
        if (small[i]) continue;
        base_primes_.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 1;
    }
    next_lo_ = range_.lo | 1U;
    if (range_.lo > 2) emitted_two_ = true;
}

bool SegmentedSieve::next_segment(std::vector<std::uint64_t>& out) {
    out.clear();
    if (done_) return false;
    if (!emitted_two_) {
        emitted_two_ = true;
        out.push_back(2);
    }
    if (next_lo_ > range_.hi) {
        done_ = true;
        return !out.empty();
    }
    const std::uint64_t lo = next_lo_;
    // slot i represents lo + 2i
    const std::uint64_t span_hi = std::min<std::uint64_t>(range_.hi, lo + 2 * (range_.segment_size - 1));
    const std::size_t slots = static_cast<std::size_t>((span_hi - lo) / 2 + 1);
    composite_.assign(slots, 0);
    for (std::uint32_t q32 : base_primes_) {
        const std::uint64_t q = q32;
        if (q * q > span_hi) break;
        std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
        if ((start & 1U) == 0) start += q;
        for (std::uint64_t m = start; m <= span_hi; m += 2 * q) composite_[(m - lo) / 2] = 1;
    }
    for (std::size_t i = 0; i < slots; ++i) {
        const std::uint64_t n = lo + 2 * i;
        if (!composite_[i] && n > 1) out.push_back(n);
    }
    next_lo_ = span_hi + 2;
    if (span_hi >= range_.hi) done_ = true;
    return true;
}

std::vector<std::uint64_t> primes_in(const PrimeRange& range) {
    std::vector<std::uint64_t> all;
    for_each_prime(range, [&](std::uint64_t p) { all.push_back(p); });
    return all;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t x) {
    if (x < 2) return {};
    return primes_in(PrimeRange{2, x});
}

SpfTable::SpfTable(std::uint64_t bound) : bound_(bound), spf_(bound + 1, 0) {
    if (bound > 0xFFFFFFFFULL) throw std::invalid_argument("SpfTable bound too large");
    for (std::uint64_t i = 2; i <= bound_; ++i) {
        if (spf_[i]) continue;
        for (std::uint64_t j = i; j <= bound_; j += i) {
            if (!spf_[j]) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

void SpfTable::check(std::uint64_t n) const {
    if (n == 0 || n > bound_) {
        throw std::out_of_range("SpfTable: " + std::to_string(n) + " outside table bound " +
                                std::to_string(bound_));
    }
}

std::uint32_t SpfTable::smallest_factor(std::uint64_t n) const {
    check(n);
    return spf_[n];
}

Factorization SpfTable::factorize(std::uint64_t n) const {
    check(n);
    Factorization out;
    while (n > 1) {
        const std::uint64_t q = spf_[n];
        int k = 0;
        while (n % q == 0) {
            n /= q;
            ++k;
        }
        out.emplace_back(q, k);
    }
    return out;
}

std::uint64_t SpfTable::euler_phi(std::uint64_t n) const {
    std::uint64_t r = 1;
    for (auto [q, k] : factorize(n)) {
        r *= q - 1;
        for (int i = 1; i < k; ++i) r *= q;
    }
    return r;
}

int SpfTable::moebius_sq(std::uint64_t n) const {
    for (auto [q, k] : factorize(n)) {
        if (k > 1) return 0;
    }
    return 1;
}

std::uint64_t SpfTable::tau(std::uint64_t n) const {
    std::uint64_t r = 1;
    for (auto [q, k] : factorize(n)) r *= static_cast<std::uint64_t>(k + 1);
    return r;
}

}  // namespace cmif
