#pragma once

// Pipeline-versus-oracle comparison and the curve self-validation gate.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmif/eccurve.hpp"
#include "cmif/frobenius.hpp"
#include "cmif/oracle.hpp"

namespace cmif {

struct OracleMismatch {
    PrimeRecord pipeline;
    GroupStructure oracle;
    std::string reason;
};

struct VerifyReport {
    std::string label;
    std::uint64_t pmax = 0;
    std::uint64_t checked = 0;    // good primes compared
    std::uint64_t ambiguous = 0;  // AmbiguousFrobenius raised, also listed as mismatches
    std::vector<OracleMismatch> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Compares (N, a_p, d_p, e_p) from dp_ep with the oracle at every good
/// p <= pmax. An AmbiguousFrobenius or internal failure counts as a mismatch.
VerifyReport verify_against_oracle(const CmCurve& curve, std::uint64_t pmax, std::uint64_t seed = 0);

class CurveValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kSelfValidationBound = 1000;

/// Throws CurveValidationError unless every prime where the model is singular
/// is declared bad and the pipeline agrees with the oracle for all good
/// p <= bound.
void self_validate(const CmCurve& curve, std::uint64_t bound = kSelfValidationBound);

}  // namespace cmif
