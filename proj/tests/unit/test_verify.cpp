#include <gtest/gtest.h>

#include "cmif/verify.hpp"

using namespace cmif;

TEST(Verify, TabledCurvesAgreeWithOracle) {
    for (const auto& c : builtin_curves()) {
        const VerifyReport r = verify_against_oracle(c, 3000, 7);
        EXPECT_TRUE(r.ok()) << c.label << " first mismatch at p=" << r.mismatches.front().pipeline.p;
        EXPECT_EQ(r.ambiguous, 0U);
        EXPECT_GT(r.checked, 400U);
    }
}

TEST(Verify, SmallBoundUsesSmallAndBadPaths) {
    const CmCurve& c = find_curve(builtin_curves(), "j1728-D4");
    const VerifyReport r = verify_against_oracle(c, 3);
    EXPECT_EQ(r.checked, 1U);  // p = 3; p = 2 is bad
    EXPECT_TRUE(r.ok());
}

TEST(Verify, CorruptedCurveIsCaught) {
    CmCurve c = find_curve(builtin_curves(), "j1728-D4");
    c.B = 1;  // j != 1728, no CM
    c.bad_primes = model_bad_primes(c.A, c.B);
    const VerifyReport r = verify_against_oracle(c, 500);
    EXPECT_FALSE(r.ok());
    EXPECT_THROW(self_validate(c), CurveValidationError);
}

TEST(Verify, MissingBadPrimeIsCaught) {
    CmCurve c = find_curve(builtin_curves(), "jm3375-D7");
    c.bad_primes = {2};
    EXPECT_THROW(self_validate(c), CurveValidationError);
}

TEST(Verify, BoundIsEnforced) {
    EXPECT_THROW((void)verify_against_oracle(builtin_curves()[0], 100001), std::domain_error);
}

TEST(Verify, CustomCurvePassesGate) {
    const CmCurve c = make_custom_curve(-35, 98, -7, 1);
    EXPECT_NO_THROW(self_validate(c));
}
