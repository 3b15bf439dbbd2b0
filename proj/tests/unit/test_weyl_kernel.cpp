#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "toruslab/weyl_kernel.hpp"

using namespace toruslab;

namespace {

const CutoffProfile chi{};

double chi_sum(int N) {
    double s = 0.0;
    for (int n = -(N - 1); n <= N - 1; ++n) s += chi(static_cast<double>(n) / N);
    return s;
}

// Independent long-double evaluation for tiny N. At N=2 the cutoff weights on
// the support are exactly 1, so no table values enter the oracle.
std::complex<long double> kernel_oracle_n2(const QuadForm& f, double t, double x1, double x2) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (int n1 = -2; n1 <= 2; ++n1)
        for (int n2 = -2; n2 <= 2; ++n2) {
            const long double w = (std::abs(n1) <= 1 && std::abs(n2) <= 1) ? 1.0L : 0.0L;
            if (w == 0.0L) continue;
            const long double q =
                (long double)n1 * n1 + 2.0L * (long double)f.beta() * n1 * n2 + (long double)f.alpha() * n2 * n2;
            const long double ph = 2.0L * M_PIl * ((long double)x1 * n1 + (long double)x2 * n2 + (long double)t * q);
            acc += std::complex<long double>(std::cos(ph), std::sin(ph));
        }
    return acc;
}

}  // namespace

TEST_CASE("kernel at the origin is the squared cutoff sum") {
    QuadForm f = QuadForm::sample_generic(21);
    for (int N : {2, 5, 16}) {
        const auto v = kernel_direct(f, chi, N, 0.0, 0.0, 0.0);
        const double s = chi_sum(N);
        CHECK(v.real() == Catch::Approx(s * s).epsilon(1e-12));
        CHECK(std::fabs(v.imag()) < 1e-9);
        CHECK(v.real() >= static_cast<double>(N) * N);
        CHECK(v.real() <= static_cast<double>(2 * N + 1) * (2 * N + 1));
    }
}

TEST_CASE("triangle inequality ceiling at random points") {
    QuadForm f = QuadForm::sample_generic(22);
    const int N = 8;
    const double peak = std::abs(kernel_direct(f, chi, N, 0.0, 0.0, 0.0));
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const double t = rng.uniform(-5.0, 5.0);
        const double x1 = rng.next_double(), x2 = rng.next_double();
        CHECK(std::abs(kernel_direct(f, chi, N, t, x1, x2)) <= peak * (1 + 1e-12));
    }
}

TEST_CASE("direct summation matches an extended-precision oracle at N=2") {
    QuadForm f = QuadForm::sample_generic(23);
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        const double t = rng.uniform(-1.0, 1.0);
        const double x1 = rng.next_double(), x2 = rng.next_double();
        const auto got = kernel_direct(f, chi, 2, t, x1, x2);
        const auto want = kernel_oracle_n2(f, t, x1, x2);
        CHECK(std::abs(got - std::complex<double>((double)want.real(), (double)want.imag())) < 1e-12 * 9);
    }
}

TEST_CASE("grid evaluation agrees with direct summation at grid nodes") {
    QuadForm f = QuadForm::sample_generic(24);
    const int N = 6;
    const std::size_t G = 64;
    Rng rng(31);
    const double t = 0.37;
    const auto grid = kernel_grid(f, chi, N, t, G);
    for (int i = 0; i < 50; ++i) {
        const std::size_t j1 = rng.below(G), j2 = rng.below(G);
        const auto want = kernel_direct(f, chi, N, t, static_cast<double>(j1) / G, static_cast<double>(j2) / G);
        const auto got = grid[j2 * G + j1];
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("sup at t=0 is attained at the origin") {
    QuadForm f = QuadForm::sample_generic(25);
    for (int N : {4, 8}) {
        const auto s = sup_over_x(f, chi, N, 0.0, 8);
        const double s0 = chi_sum(N) * chi_sum(N);
        CHECK(s.sup_abs == Catch::Approx(s0).epsilon(1e-10));
        CHECK(std::fabs(s.arg_x1) + std::fabs(s.arg_x2) < 1e-12);
    }
}

TEST_CASE("sup estimate tracks an independently polished dense-grid maximum") {
    QuadForm f = QuadForm::sample_generic(26);
    const int N = 8;
    Rng rng(41);
    for (int i = 0; i < 2; ++i) {
        const double t = rng.uniform(0.0, 3.0);
        const auto s = sup_over_x(f, chi, N, t, 8, 5);
        // oracle: 64x denser grid (8x per axis over the oversample-8 grid),
        // then an independent shrinking 5x5 polish from the dense argmax
        const std::size_t Gd = 1024;
        const auto grid = kernel_grid(f, chi, N, t, Gd);
        double best = -1.0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t r = 0; r < Gd; ++r)
            for (std::size_t c = 0; c < Gd; ++c)
                if (std::norm(grid[r * Gd + c]) > best) { best = std::norm(grid[r * Gd + c]); bi = r; bj = c; }
        double x1 = static_cast<double>(bj) / Gd, x2 = static_cast<double>(bi) / Gd;
        double val = std::sqrt(best);
        double w = 1.0 / Gd;
        for (int round = 0; round < 8; ++round) {
            double rx1 = x1, rx2 = x2;
            for (int di = -2; di <= 2; ++di)
                for (int dj = -2; dj <= 2; ++dj) {
                    const double a = std::abs(kernel_direct(f, chi, N, t, x1 + dj * w / 3.0, x2 + di * w / 3.0));
                    if (a > val) { val = a; rx1 = x1 + dj * w / 3.0; rx2 = x2 + di * w / 3.0; }
                }
            x1 = rx1; x2 = rx2; w /= 3.0;
        }
        CHECK(s.sup_abs == Catch::Approx(val).epsilon(1e-6));
    }
}

TEST_CASE("sup is symmetric under time reversal") {
    QuadForm f = QuadForm::sample_generic(27);
    Rng rng(43);
    for (int i = 0; i < 5; ++i) {
        const double t = rng.uniform(0.0, 10.0);
        const double a = sup_over_x(f, chi, 12, t, 4, 1).sup_abs;
        const double b = sup_over_x(f, chi, 12, -t, 4, 1).sup_abs;
        CHECK(a == Catch::Approx(b).epsilon(1e-9));
    }
}

TEST_CASE("dispersive ratio: frozen constant and the short-time limit") {
    QuadForm f = QuadForm::sample_generic(28);
    const int N = 16;
    CHECK(dispersive_ratio(f, chi, N, 1.0 / (N * N)) <= 5.0);
    // t -> 0+: ratio -> K_N(0,0)/N^2, computable exactly from the table
    const double tiny = 1e-12;
    const double expect = chi_sum(N) * chi_sum(N) / (static_cast<double>(N) * N);
    CHECK(dispersive_ratio(f, chi, N, tiny) == Catch::Approx(expect).epsilon(1e-6));
    CHECK(expect >= 1.0);
    CHECK(expect <= 4.5);
    CHECK_THROWS_AS(dispersive_ratio(f, chi, N, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dispersive_ratio(f, chi, N, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dispersive_ratio(f, chi, N, -0.001), std::invalid_argument);
}

TEST_CASE("weyl majorant: exact t=0 value, ceiling, and kernel domination") {
    QuadForm f = QuadForm::sample_generic(29);
    const int N = 8;
    const double full = static_cast<double>(4 * N + 1) * (4 * N + 1) * N * N;
    CHECK(weyl_rhs(f, N, 0.0) == Catch::Approx(full).epsilon(1e-12));
    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(0.0, 100.0);
        const double rhs = weyl_rhs(f, N, t);
        CHECK(rhs <= full * (1 + 1e-12));
        const double x1 = rng.next_double(), x2 = rng.next_double();
        const double k = std::abs(kernel_direct(f, chi, N, t, x1, x2));
        CHECK(k * k <= 8.0 * rhs);
    }
}

TEST_CASE("time integral of sup^4: ceiling and self-convergence") {
    QuadForm f = QuadForm::sample_generic(30);
    const int N = 8;
    const double dt = 1.0 / (8.0 * f.norm() * N * N);
    const double near1 = l4_time_integral(f, chi, N, 1.0 + 1e-7, dt, 4);
    CHECK(near1 >= 0.0);
    CHECK(near1 <= 2e-7 * std::pow(chi_sum(N) * chi_sum(N), 4));
    const double T = 4.0;
    const double full = l4_time_integral(f, chi, N, T, dt, 4);
    CHECK(full <= (T - 1.0) * std::pow(chi_sum(N) * chi_sum(N), 4));
    const double halved = l4_time_integral(f, chi, N, T, dt / 2.0, 4);
    CHECK(std::fabs(full - halved) <= 0.02 * halved);
    CHECK_THROWS_AS(l4_time_integral(f, chi, N, T, dt * 4.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(l4_time_integral(f, chi, N, 0.5, dt, 4), std::invalid_argument);
}

TEST_CASE("sweep table serializes with the expected header") {
    QuadForm f = QuadForm::sample_generic(33);
    SweepTable tab{f, 33, {}};
    tab.rows.push_back({8, 0.5, 1.0, 2.0, 0.0, 33});
    tab.rows.push_back({8, 1.5, 1.5, 2.5, 0.0, 33});
    const std::string csv = tab.to_csv();
    CHECK(csv.rfind("N,t,sup_abs,weyl_rhs,ratio_disp,seed\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
