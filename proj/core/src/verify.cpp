#include "cmif/verify.hpp"

#include <algorithm>

#include "cmif/primesieve.hpp"

namespace cmif {

VerifyReport verify_against_oracle(const CmCurve& curve, std::uint64_t pmax, std::uint64_t seed) {
    if (pmax > kOracleMaxPrime) throw std::domain_error("verify: pmax exceeds the oracle bound 10^5");
    VerifyReport report;
    report.label = curve.label;
    report.pmax = pmax;
    std::mt19937_64 rng(seed);
    for (std::uint64_t p : primes_upto(pmax)) {
        if (curve.is_bad(p)) continue;
        ++report.checked;
        const GroupStructure want = group_structure(curve, p);
        PrimeRecord got;
        got.p = p;
        try {
            got = dp_ep(p, curve, rng);
        } catch (const AmbiguousFrobenius& e) {
            ++report.ambiguous;
            report.mismatches.push_back({got, want, e.what()});
            continue;
        } catch (const std::exception& e) {
            report.mismatches.push_back({got, want, e.what()});
            continue;
        }
        std::string why;
        const auto want_ap = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(want.n);
        if (got.n != want.n) why += "N ";
        if (got.a_p != want_ap) why += "a_p ";
        if (got.d != want.d) why += "d_p ";
        if (got.e != want.e) why += "e_p ";
        if (!why.empty()) {
            why.pop_back();
            report.mismatches.push_back({got, want, "mismatch in " + why});
        }
    }
    return report;
}

void self_validate(const CmCurve& curve, std::uint64_t bound) {
    std::vector<std::uint64_t> singular;
    try {
        singular = model_bad_primes(curve.A, curve.B);
    } catch (const std::exception& e) {
        throw CurveValidationError(curve.label + ": " + e.what());
    }
    for (std::uint64_t q : singular) {
        if (!curve.is_bad(q)) {
            throw CurveValidationError(curve.label + ": model is singular mod " + std::to_string(q) +
                                       " but the prime is not listed as bad");
        }
    }
    const VerifyReport r = verify_against_oracle(curve, bound);
    if (!r.ok()) {
        const auto& m = r.mismatches.front();
        throw CurveValidationError(curve.label + ": " + std::to_string(r.mismatches.size()) +
                                   " oracle mismatches up to " + std::to_string(bound) + ", first at p=" +
                                   std::to_string(m.pipeline.p) + " (" + m.reason + ")");
    }
}

}  // namespace cmif
