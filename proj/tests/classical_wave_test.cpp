#include "photonsplit/classical_wave.hpp"
#include "photonsplit/operator_expansion.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace photonsplit;
using namespace photonsplit::classical;

TEST(classical_split, examples) {
    auto [a, b] = classical_split(ClassicalField::from_photons(2), ClassicalField::from_photons(2));
    EXPECT_NEAR(a.photon_number(), 2, 1e-14);
    EXPECT_NEAR(b.photon_number(), 2, 1e-14);

    auto [c, d] = classical_split(ClassicalField::from_photons(2), ClassicalField{0});
    EXPECT_NEAR(c.photon_number(), 1, 1e-14);
    EXPECT_NEAR(d.photon_number(), 1, 1e-14);

    // quadrature: A1 = (1 + i*i)/sqrt2 = 0, A2 = (i + i)/sqrt2
    auto [e, f] = classical_split(ClassicalField{1}, ClassicalField{{0, 1}});
    EXPECT_NEAR(e.photon_number(), 0, 1e-15);
    EXPECT_NEAR(f.photon_number(), 2, 1e-14);
}

TEST(classical_split, conserves_energy) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        ClassicalField a1{{u(rng), u(rng)}}, a2{{u(rng), u(rng)}};
        auto [b1, b2] = classical_split(a1, a2);
        double before = a1.photon_number() + a2.photon_number();
        EXPECT_NEAR(b1.photon_number() + b2.photon_number(), before, 1e-12 * std::max(1.0, before));
    }
}

TEST(classical_split, mean_matches_quantum_mean) {
    for (int n = 0; n <= 10; ++n)
        for (int n1 = 0; n1 <= n; ++n1) {
            auto [A1, A2] = classical_split(ClassicalField::from_photons(n1), ClassicalField::from_photons(n - n1));
            auto [m1, m2] = mean_output({n1, n - n1}, SplitterSpec::balanced());
            EXPECT_NEAR(A1.photon_number(), to_double(m1), 1e-12);
            EXPECT_NEAR(A2.photon_number(), to_double(m2), 1e-12);
        }
}

TEST(classical_photon_numbers, examples) {
    EXPECT_EQ(classical_photon_numbers(2, 2), std::make_pair(2.0, 2.0));
    EXPECT_EQ(classical_photon_numbers(4, 0), std::make_pair(2.0, 2.0));
    EXPECT_EQ(classical_photon_numbers(0, 0), std::make_pair(0.0, 0.0));
    EXPECT_THROW(classical_photon_numbers(-1, 0), std::invalid_argument);
}

TEST(mz_intensities, examples) {
    auto quarter_turn = mz_intensities({0.5, 0, 90});
    EXPECT_NEAR(quarter_turn.i1, 1, 1e-15);
    EXPECT_NEAR(quarter_turn.i2, 0, 1e-15);
    EXPECT_TRUE(quarter_turn.conserves);

    auto in_phase = mz_intensities({0.5, 0, 0});
    EXPECT_NEAR(in_phase.i1, 1, 1e-15);
    EXPECT_NEAR(in_phase.i2, 1, 1e-15);
    EXPECT_NEAR(in_phase.residual, 1, 1e-15);
    EXPECT_FALSE(in_phase.conserves);

    auto unbalanced = mz_intensities({0.25, 0, 90});
    EXPECT_NEAR(unbalanced.i1, 0.75, 1e-15);
    EXPECT_NEAR(unbalanced.i2, 0.25, 1e-15);

    EXPECT_THROW(mz_intensities({1.5, 0, 0}), std::invalid_argument);
}

TEST(mz_intensities, satisfy_conservation_identity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(0, 1), phase(-720, 720);
    for (int i = 0; i < 10000; ++i) {
        MZConfig cfg{r(rng), phase(rng), phase(rng)};
        auto I = mz_intensities(cfg);
        double r2 = cfg.r2, t2 = cfg.t2();
        double rhs = (r2 + t2) * (r2 + t2) + 2 * r2 * t2 * (1 + std::cos(2 * deg_to_rad(cfg.phase_diff_deg())));
        ASSERT_NEAR(I.i1 + I.i2, rhs, 1e-12);
    }
}

TEST(mz_conservation_slope, matches_finite_difference) {
    for (double r2 : {0.1, 0.5, 0.8})
        for (double d : {10.0, 45.0, 100.0, 300.0}) {
            double h = 1e-5;
            double fd = (mz_intensities({r2, 0, d + h}).residual - mz_intensities({r2, 0, d - h}).residual) / (2 * h);
            EXPECT_NEAR(mz_conservation_slope(r2, d), fd, 1e-8);
        }
}

TEST(lossless_phase_scan, finds_plus_minus_ninety) {
    for (double r2 : {0.5, 0.1, 0.25, 0.75, 0.9}) {
        auto hits = lossless_phase_scan(r2, 0.5);
        ASSERT_EQ(hits.size(), 2u) << r2;
        EXPECT_NEAR(hits[0], 90, 1e-9);
        EXPECT_NEAR(hits[1], 270, 1e-9);
    }
}

TEST(lossless_phase_scan, refines_off_grid) {
    // 360/7 degrees never lands on 90 exactly
    auto hits = lossless_phase_scan(0.3, 360.0 / 7.0 / 8.0);
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_NEAR(hits[0], 90, 1e-9);
    EXPECT_NEAR(hits[1], 270, 1e-9);
}

TEST(lossless_phase_scan, errors) {
    EXPECT_THROW(lossless_phase_scan(1, 0.5), DegenerateSplitter);
    EXPECT_THROW(lossless_phase_scan(0, 0.5), DegenerateSplitter);
    EXPECT_THROW(lossless_phase_scan(0.5, 0.7), std::invalid_argument);
    EXPECT_THROW(lossless_phase_scan(0.5, -1), std::invalid_argument);
    EXPECT_THROW(lossless_phase_scan(1.2, 0.5), std::invalid_argument);
}
