#pragma once

// Segmented odd-only sieve of Eratosthenes and a smallest-prime-factor table.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cmif {

struct PrimeRange {
    std::uint64_t lo = 2;
    std::uint64_t hi = 2;
    std::size_t segment_size = std::size_t{1} << 18;  // odd slots per segment
};

/// Streams the primes of a range one segment at a time. Within and across
/// segments primes come out in increasing order.
class SegmentedSieve {
public:
    explicit SegmentedSieve(PrimeRange range);

    /// Fills `out` with the primes of the next segment; returns false once the
    /// range is exhausted. A segment may contain no primes.
    bool next_segment(std::vector<std::uint64_t>& out);

    [[nodiscard]] const PrimeRange& range() const { return range_; }

private:
    PrimeRange range_;
    std::vector<std::uint32_t> base_primes_;  // odd primes up to sqrt(hi)
    std::uint64_t next_lo_;                   // next odd number to sieve
    bool emitted_two_ = false;
    bool done_ = false;
    std::vector<std::uint8_t> composite_;
};

/// Every prime <= x, increasing. Empty for x < 2.
std::vector<std::uint64_t> primes_upto(std::uint64_t x);

/// Every prime in [range.lo, range.hi].
std::vector<std::uint64_t> primes_in(const PrimeRange& range);

template <typename Fn>
void for_each_prime(const PrimeRange& range, Fn&& fn) {
    SegmentedSieve sieve(range);
    std::vector<std::uint64_t> seg;
    while (sieve.next_segment(seg)) {
        for (auto p : seg) fn(p);
    }
}

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Smallest-prime-factor table on [1, bound]. Built once, read-only after.
class SpfTable {
public:
    explicit SpfTable(std::uint64_t bound = 20000);

    [[nodiscard]] std::uint64_t bound() const { return bound_; }

    /// Throws std::out_of_range when n is 0 or above the table bound.
    [[nodiscard]] Factorization factorize(std::uint64_t n) const;

    [[nodiscard]] std::uint64_t euler_phi(std::uint64_t n) const;
    [[nodiscard]] int moebius_sq(std::uint64_t n) const;
    [[nodiscard]] std::uint64_t tau(std::uint64_t n) const;
    [[nodiscard]] std::uint32_t smallest_factor(std::uint64_t n) const;

private:
    void check(std::uint64_t n) const;

    std::uint64_t bound_;
    std::vector<std::uint32_t> spf_;
};

}  // namespace cmif
