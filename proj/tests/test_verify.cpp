#include <gtest/gtest.h>

#include "bhlab/verify.hpp"

using namespace bhlab;

namespace {

VerifyConfig small(int trials, Field field = Field::Real) {
    VerifyConfig cfg;
    cfg.trials = trials;
    cfg.field = field;
    return cfg;
}

} // namespace

TEST(Verify, MinkowskiCampaignPasses) {
    for (Field f : {Field::Real, Field::Complex}) {
        const auto out = fuzz_minkowski(small(300, f));
        EXPECT_EQ(out.verdict, Verdict::Pass);
        EXPECT_LE(out.worst_slack, out.tol);
    }
}

TEST(Verify, BleiCampaignPasses) {
    for (Field f : {Field::Real, Field::Complex}) {
        const auto out = fuzz_blei(small(300, f));
        EXPECT_EQ(out.verdict, Verdict::Pass);
    }
}

TEST(Verify, InterpolationCampaignPasses) {
    for (Field f : {Field::Real, Field::Complex}) {
        const auto out = fuzz_interpolation(small(300, f));
        EXPECT_EQ(out.verdict, Verdict::Pass);
    }
}

TEST(Verify, BhCampaignPasses) {
    auto cfg = small(200);
    cfg.m = 2;
    cfg.t = 1.0;
    const auto out = fuzz_bh(cfg);
    EXPECT_EQ(out.verdict, Verdict::Pass);
    // sign matrices attain the constant (Hadamard form), so <= with slack
    EXPECT_LE(out.worst_ratio, c_constant_closed(2, 1.0, Field::Real) * (1 + 1e-9));
    // complex forms use ascent norms: violations are impossible by design
    auto ccfg = small(50, Field::Complex);
    ccfg.m = 2;
    const auto cout_ = fuzz_bh(ccfg);
    EXPECT_EQ(cout_.verdict, Verdict::Pass);
}

TEST(Verify, KhinchineCampaignPasses) {
    EXPECT_EQ(fuzz_khinchine(small(200, Field::Real)).verdict, Verdict::Pass);
    EXPECT_EQ(fuzz_khinchine(small(60, Field::Complex)).verdict, Verdict::Pass);
}

TEST(Verify, DpsCampaignNeverViolates) {
    auto cfg = small(60);
    const auto out = fuzz_dps(cfg);
    EXPECT_EQ(out.verdict, Verdict::Pass);
    EXPECT_EQ(out.inconclusive, 0);
}

TEST(Verify, RejectsZeroTrials) {
    EXPECT_THROW(fuzz_bh(small(0)), std::invalid_argument);
    EXPECT_THROW(run_check("nonsense", small(10)), std::invalid_argument);
}

TEST(Verify, ReportsAreDeterministic) {
    const auto a = fuzz_minkowski(small(100)).to_json().dump(2);
    const auto b = fuzz_minkowski(small(100)).to_json().dump(2);
    EXPECT_EQ(a, b);
    auto cfg = small(100);
    cfg.seed = 43;
    EXPECT_NE(a, fuzz_minkowski(cfg).to_json().dump(2));
}

TEST(Verify, WitnessesReplayBitForBit) {
    for (const char* check : {"minkowski", "blei", "interpolation", "bh", "khinchine", "dps"}) {
        auto cfg = small(40);
        cfg.m = 2;
        const auto out = run_check(check, cfg);
        const auto replay = replay_witness(out.to_json());
        ASSERT_LE(std::abs(replay.recomputed_slack - replay.stored_slack),
                  1e-12 * std::max(1.0, std::abs(replay.stored_slack)))
            << check;
    }
}

TEST(Verify, ComplexWitnessesReplayToo) {
    for (const char* check : {"minkowski", "khinchine"}) {
        const auto out = run_check(check, small(40, Field::Complex));
        const auto replay = replay_witness(out.to_json());
        ASSERT_LE(std::abs(replay.recomputed_slack - replay.stored_slack), 1e-12) << check;
    }
}
