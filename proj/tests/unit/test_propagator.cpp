#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "toruslab/propagator.hpp"

using namespace toruslab;

namespace {
const CutoffProfile chi{};
}

TEST_CASE("evolution is the identity at t=0, unitary, and a group") {
    QuadForm f = QuadForm::sample_generic(91);
    FourierData data(6, {{0, 0}, {1, 2}, {-3, 1}, {4, 3}},
                     {{1.0, 0.0}, {0.5, -0.25}, {0.0, 1.0}, {-2.0, 0.125}});
    const FourierData same = evolve(f, data, 0.0);
    for (std::size_t i = 0; i < data.amps().size(); ++i)
        CHECK(std::abs(same.amps()[i] - data.amps()[i]) < 1e-15);
    Rng rng(19);
    const double n0 = data.l2_norm();
    for (int i = 0; i < 10; ++i) {
        const double t1 = rng.uniform(-20.0, 20.0), t2 = rng.uniform(-20.0, 20.0);
        const FourierData a = evolve(f, data, t1);
        CHECK(a.l2_norm() == Catch::Approx(n0).epsilon(1e-12));
        const FourierData ab = evolve(f, a, t2);
        const FourierData direct = evolve(f, data, t1 + t2);
        for (std::size_t j = 0; j < ab.amps().size(); ++j)
            CHECK(std::abs(ab.amps()[j] - direct.amps()[j]) < 1e-11);
    }
}

TEST_CASE("fourier data validates its support") {
    CHECK_THROWS_AS(FourierData(3, {{3, 0}}, {{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(FourierData(3, {{1, 0}, {0, 1}}, {{1.0, 0.0}}), std::invalid_argument);
    CHECK_NOTHROW(FourierData(3, {{2, 2}}, {{1.0, 0.0}}));  // |k|^2 = 8 < 9
}

TEST_CASE("single-mode anchors: norm is exactly |c| T^{1/p}") {
    QuadForm f = QuadForm::sample_generic(92);
    const int N = 4;
    const double step = 1.0 / (8.0 * f.norm() * N * N);
    for (double p : {2.0, 4.0, 7.5}) {
        for (double T : {1.0, 3.0}) {
            FourierData zero(N, {{0, 0}}, {{1.0, 0.0}});
            const NormResult r = lp_spacetime_norm(f, zero, p, T, 8 * N, step);
            CHECK(r.value == Catch::Approx(std::pow(T, 1.0 / p)).epsilon(1e-6));
            FourierData mode(N, {{2, -1}}, {{0.3, 0.4}});  // |c| = 0.5
            const NormResult m = lp_spacetime_norm(f, mode, p, T, 8 * N, step);
            CHECK(m.value == Catch::Approx(0.5 * std::pow(T, 1.0 / p)).epsilon(1e-6));
        }
    }
}

TEST_CASE("two-mode norm self-converges under grid refinement") {
    QuadForm f = QuadForm::sample_generic(93);
    const int N = 4;
    FourierData data(N, {{1, 0}, {-2, 3}}, {{1.0, 0.0}, {0.7, -0.7}});
    const double step = 1.0 / (8.0 * f.norm() * N * N);
    const NormResult coarse = lp_spacetime_norm(f, data, 4.0, 1.0, 8 * N, step);
    const NormResult fine = lp_spacetime_norm(f, data, 4.0, 1.0, 32 * N, step / 4.0);
    CHECK(coarse.value == Catch::Approx(fine.value).epsilon(1e-4));
}

TEST_CASE("norm is nondecreasing in T on aligned grids") {
    QuadForm f = QuadForm::sample_generic(94);
    const int N = 4;
    FourierData data(N, {{1, 0}, {0, 2}, {-1, -1}}, {{1.0, 0.0}, {0.5, 0.5}, {0.25, 0.0}});
    const double step = 1.0 / 512.0;
    double last = 0.0;
    for (double T : {1.0, 2.0, 4.0}) {
        const double v = lp_spacetime_norm(f, data, 6.0, T, 8 * N, step).value;
        CHECK(v >= last - 1e-12);
        last = v;
    }
}

TEST_CASE("norm preconditions") {
    QuadForm f = QuadForm::sample_generic(95);
    FourierData data(4, {{0, 0}}, {{1.0, 0.0}});
    CHECK_THROWS_AS(lp_spacetime_norm(f, data, 4.0, 1.0, 16, 1e-4), std::invalid_argument);
    CHECK_THROWS_AS(lp_spacetime_norm(f, data, 4.0, 1.0, 32, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(lp_spacetime_norm(f, data, 0.5, 1.0, 32, 1e-4), std::invalid_argument);
}

TEST_CASE("conjectured bracket: general formula and d=2 piecewise table") {
    // dominant terms at d=2, p=8: N^{1/2} and T^{1/8} N^{1/8}
    for (int N : {8, 64}) {
        for (double T : {1.0, 1e4}) {
            const double dom = std::pow(N, 0.5) + std::pow(T, 0.125) * std::pow(N, 0.125);
            const double v = conjecture_bound(2, 8.0, N, T);
            CHECK(v >= dom);
            CHECK(v <= 3.0 * dom);
        }
    }
    // the n=0 term alone is T^{1/p}
    CHECK(conjecture_bound(2, 8.0, 1, 256.0) == Catch::Approx(1.0 + 3.0 * std::pow(256.0, 0.125)));
    // d=2, p=12: N^{2/3} and T^{1/12} N^{1/3} dominate
    {
        const int N = 64;
        const double T = 1e3;
        const double dom = std::pow(N, 2.0 / 3.0) + std::pow(T, 1.0 / 12.0) * std::pow(N, 1.0 / 3.0);
        const double v = conjecture_bound(2, 12.0, N, T);
        CHECK(v >= dom);
        CHECK(v <= 3.0 * dom);
    }
    // piecewise table tracks the general formula within a constant
    for (double p : {2.5, 5.0, 8.0, 12.0})
        for (int N : {4, 16, 64})
            for (double T : {1.0, 10.0, 1e4}) {
                const double r = conjecture_bound(2, p, N, T) / conjecture_piecewise_d2(p, N, T);
                CHECK(r >= 1.0 - 1e-12);
                CHECK(r <= 4.0);
            }
    CHECK_THROWS_AS(conjecture_bound(0, 8.0, 4, 1.0), std::invalid_argument);
}

TEST_CASE("theorem bound brackets") {
    const int N = 16;
    const double T = 32.0;
    const TheoremBounds b8 = theorem_bounds(8.0, N, T);
    CHECK(b8.weyl == Catch::Approx(std::pow(N, 0.5) + std::pow(T, 0.125) * std::pow(N, 1.0 / 3.0)));
    REQUIRE(b8.p8_10.has_value());
    CHECK(*b8.p8_10 == Catch::Approx(std::pow(N, 0.5) + std::pow(T, 0.125) * std::pow(N, 0.125)));
    const TheoremBounds b12 = theorem_bounds(12.0, N, T);
    REQUIRE(b12.p8_10.has_value());
    CHECK(*b12.p8_10 ==
          Catch::Approx(std::pow(N, 1.0 - 4.0 / 12) + std::pow(N, 1.0 - 8.0 / 12) * std::pow(T, 1.0 / 12)));
    CHECK_FALSE(theorem_bounds(6.0, N, T).p8_10.has_value());
    CHECK_THROWS_AS(theorem_bounds(4.0, N, T), std::invalid_argument);
    // at T=1 both brackets collapse to ~ N^{1-4/p}
    const TheoremBounds b1 = theorem_bounds(8.0, N, 1.0);
    CHECK(b1.weyl / std::pow(N, 0.5) >= 1.0);
    CHECK(b1.weyl / std::pow(N, 0.5) <= 2.0);
    CHECK(*b1.p8_10 / std::pow(N, 0.5) <= 2.0);
}

TEST_CASE("refocusing search") {
    // integer coefficients: q = 1 refocuses exactly
    const RefocusResult r1 = refocus_search(QuadForm(-2.0, 1.0), 8, 100);
    CHECK(r1.found);
    CHECK(r1.q == 1);
    CHECK(r1.worst == 0.0);
    // rational coefficients with denominator D: q <= D
    const RefocusResult r4 = refocus_search(QuadForm(-1.75, 0.25), 16, 100);
    CHECK(r4.found);
    CHECK(r4.q <= 4);
    // generic form: equals an independent re-scan
    QuadForm f = QuadForm::sample_generic(96);
    const int N = 4;
    const RefocusResult r = refocus_search(f, N, 1000000);
    REQUIRE(r.found);
    long long expect = 0;
    for (long long q = 1; q <= 1000000; ++q) {
        const double wa = std::fabs(q * f.alpha() - std::nearbyint(q * f.alpha()));
        const double wb = std::fabs(q * f.beta() - std::nearbyint(q * f.beta()));
        if (std::fmax(wa, wb) < 1.0 / (N * N)) { expect = q; break; }
    }
    CHECK(r.q == expect);
    CHECK(r.worst < 1.0 / (N * N));
    // not-found marker keeps the best candidate
    const RefocusResult nf = refocus_search(QuadForm::sample_generic(97), 64, 3);
    if (!nf.found) CHECK(nf.q >= 1);
}

TEST_CASE("exponent fitting") {
    const double e = std::exp(1.0);
    CHECK(exponent_fit({{1.0, 1.0}, {e, e}, {e * e, e * e}}).slope == Catch::Approx(1.0));
    CHECK(exponent_fit({{1.0, 3.0}, {e, 3.0}, {e * e, 3.0}}).slope == Catch::Approx(0.0).margin(1e-12));
    Rng rng(29);
    std::vector<std::pair<double, double>> samples;
    for (double s : {1.0, 2.0, 4.0, 8.0, 16.0})
        samples.push_back({s, std::pow(s, 1.5) * (1.0 + 0.01 * (2.0 * rng.next_double() - 1.0))});
    const ExponentFit fit = exponent_fit(samples);
    CHECK(fit.slope >= 1.45);
    CHECK(fit.slope <= 1.55);
    CHECK(fit.r2 > 0.999);
    CHECK_THROWS_AS(exponent_fit({{1.0, 1.0}, {2.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(exponent_fit({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
    CHECK_THROWS_AS(exponent_fit({{1.0, -1.0}, {2.0, 2.0}, {3.0, 3.0}}), std::invalid_argument);
}

TEST_CASE("bump data profiles") {
    const FourierData ball = bump_data(8, BumpKind::IndicatorBall);
    long long pts = 0;
    for (long long k1 = -7; k1 <= 7; ++k1)
        for (long long k2 = -7; k2 <= 7; ++k2)
            if (k1 * k1 + k2 * k2 < 64) ++pts;
    CHECK(ball.l2_norm() == Catch::Approx(std::sqrt(static_cast<double>(pts))).epsilon(1e-12));
    const FourierData line = bump_data(8, BumpKind::Line, chi);
    for (const auto& k : line.support()) CHECK(k.k2 == 0);
    CHECK(line.l2_norm() == Catch::Approx(1.0).epsilon(1e-12));
    const FourierData bump = bump_data(16, BumpKind::FullBump, chi);
    CHECK(bump.l2_norm() >= 0.9);
    CHECK(bump.l2_norm() <= 1.1);
    CHECK_THROWS_AS(bump_data(1, BumpKind::FullBump, chi), std::invalid_argument);
}
