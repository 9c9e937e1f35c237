#pragma once

// Per-prime invariant factors (d_p, e_p) of a CM curve.
//
// At an ordinary prime p > 3 the Frobenius pi_p is an element of norm p in
// the CM order with #E(F_p) = Nm(pi_p - 1), and d | d_p exactly when
// pi_p = 1 (mod d) in the order; so d_p = content(pi_p - 1). At the other
// good primes p > 3 the reduction is supersingular: a_p = 0 and d_p <= 2,
// with d_p = 2 iff the full 2-torsion is rational.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "cmif/eccurve.hpp"
#include "cmif/quadorder.hpp"

namespace cmif {

enum class ReductionKind { Bad, GoodOrdinary, GoodSupersingular, GoodSmall };

/// "bad", "ord", "ss", "small"
const char* to_string(ReductionKind k);

struct PrimeRecord {
    std::uint64_t p = 0;
    ReductionKind kind = ReductionKind::Bad;
    std::int64_t a_p = 0;
    std::int64_t pi_a = 0;  // pi_p = pi_a + pi_b * beta for ordinary p, else 0
    std::int64_t pi_b = 0;
    std::uint64_t n = 0;    // #E(F_p), 0 when bad
    std::uint64_t d = 0;
    std::uint64_t e = 0;

    [[nodiscard]] bool good() const { return kind != ReductionKind::Bad; }
    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

class AmbiguousFrobenius : public std::runtime_error {
public:
    explicit AmbiguousFrobenius(std::uint64_t p);
    [[nodiscard]] std::uint64_t prime() const { return p_; }

private:
    std::uint64_t p_;
};

inline constexpr int kMaxDisambiguationPoints = 32;

ReductionKind classify(std::uint64_t p, const CmCurve& curve);

struct Frobenius {
    QuadInt pi;
    std::uint64_t n = 0;
};

/// Frobenius at an ordinary prime p > 3, up to conjugation. The unit
/// ambiguity of the norm-p element is resolved by discarding candidates
/// whose implied group structure is inconsistent with the rational 2-torsion
/// or whose exponent fails to kill a random point.
Frobenius frobenius_at(std::uint64_t p, const CmCurve& curve, std::mt19937_64& rng);

PrimeRecord dp_ep(std::uint64_t p, const CmCurve& curve, std::mt19937_64& rng);

}  // namespace cmif
