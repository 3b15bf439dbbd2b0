#include <catch_amalgamated.hpp>

#include <cmath>

#include "toruslab/quadform.hpp"

using namespace toruslab;

namespace {

// O(R^3) reference count for the same window.
long long combos_brute(const QuadForm& f, long long R, double tau, double delta) {
    long long cnt = 0;
    for (long long A = -R; A <= R; ++A)
        for (long long B = -R; B <= R; ++B)
            for (long long C = -R; C <= R; ++C)
                if (std::fabs(A + B * f.alpha() + C * f.beta() - tau) < delta) ++cnt;
    return cnt;
}

}  // namespace

TEST_CASE("eval_q matches the displayed expansion") {
    QuadForm f = QuadForm::sample_generic(11);
    CHECK(eval_q(f, {1, 0}) == 1.0);
    CHECK(eval_q(f, {0, 1}) == f.alpha());
    CHECK(eval_q(f, {1, 1}) == Catch::Approx(1.0 + 2.0 * f.beta() + f.alpha()).epsilon(1e-15));
}

TEST_CASE("linear forms and the Euler-type identity") {
    QuadForm f = QuadForm::sample_generic(12);
    auto [l1a, l2a] = linear_forms(f, {1, 0});
    CHECK(l1a == 1.0);
    CHECK(l2a == f.beta());
    auto [l1b, l2b] = linear_forms(f, {0, 1});
    CHECK(l1b == f.beta());
    CHECK(l2b == f.alpha());
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        LatticePoint r{static_cast<long long>(rng.below(201)) - 100,
                       static_cast<long long>(rng.below(201)) - 100};
        auto [L1, L2] = linear_forms(f, r);
        const double lhs = r.k1 * L1 + r.k2 * L2;
        CHECK(lhs == Catch::Approx(eval_q(f, r)).margin(1e-9));
    }
}

TEST_CASE("sample_generic is deterministic and lands in E") {
    for (std::uint64_t seed : {1ULL, 7ULL, 12345ULL, 999999ULL}) {
        QuadForm a = QuadForm::sample_generic(seed);
        QuadForm b = QuadForm::sample_generic(seed);
        CHECK(a.alpha() == b.alpha());
        CHECK(a.beta() == b.beta());
        CHECK(a.in_E());
        auto [l1, l2] = a.eigenvalues();
        CHECK(std::fabs(l1) > 1.0);
        CHECK(std::fabs(l2) > 1.0);
        // roots of x^2 - (1+alpha) x + (alpha - beta^2)
        const double prod = a.alpha() - a.beta() * a.beta();
        CHECK(l1 * l2 == Catch::Approx(prod).margin(1e-12));
    }
}

TEST_CASE("rejection acceptance rate is positive and stable") {
    // The E-slice has measure 20/3 inside [-2,2]^2, i.e. rate ~0.4167.
    Rng rng(2024);
    int batches[4] = {0, 0, 0, 0};
    const int per = 2500;
    for (int b = 0; b < 4; ++b)
        for (int i = 0; i < per; ++i) {
            const double alpha = rng.uniform(-2.0, 2.0);
            const double beta = rng.uniform(-2.0, 2.0);
            if (QuadForm(alpha, beta).in_E()) ++batches[b];
        }
    for (int b = 0; b < 4; ++b) {
        const double rate = static_cast<double>(batches[b]) / per;
        CHECK(rate > 0.4167 * 0.8);
        CHECK(rate < 0.4167 * 1.2);
    }
}

TEST_CASE("count_small_combos: window covering everything") {
    QuadForm f = QuadForm::sample_generic(31);
    const long long R = 6;
    const double cover = (1.0 + std::fabs(f.alpha()) + std::fabs(f.beta())) * R + 1.0;
    CHECK(count_small_combos(f, R, 0.0, cover) == (2 * R + 1) * (2 * R + 1) * (2 * R + 1));
    // tiny window still contains the zero triple
    CHECK(count_small_combos(f, R, 0.0, 1e-12) >= 1);
}

TEST_CASE("count_small_combos equals the triple-loop oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        QuadForm f = QuadForm::sample_generic(500 + seed);
        const long long R = 20;
        const double delta = 1e-3;
        const long long fast = count_small_combos(f, R, 0.0, delta);
        CHECK(fast == combos_brute(f, R, 0.0, delta));
    }
}

TEST_CASE("count_small_combos monotonicity and the lattice bound") {
    Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        QuadForm f = QuadForm::sample_generic(900 + trial);
        const double tau = rng.uniform(-3.0, 3.0);
        const long long R = 10 + static_cast<long long>(rng.below(10));
        double last = -1;
        for (double delta : {1e-3, 1e-2, 1e-1, 1.0}) {
            const double c = static_cast<double>(count_small_combos(f, R, tau, delta));
            CHECK(c >= last);
            last = c;
        }
        CHECK(count_small_combos(f, R, tau, 0.05) <= count_small_combos(f, R + 3, tau, 0.05));
        // numerical form of the lattice count display: count <= C (R^4 delta + 1)
        for (double delta : {1e-3, 1e-2, 1e-1}) {
            const double c = static_cast<double>(count_small_combos(f, R, 0.0, delta));
            const double bound = static_cast<double>(R) * R * R * R * delta + 1.0;
            CHECK(c <= 10.0 * bound);
        }
    }
}

TEST_CASE("coefficient range is validated") {
    CHECK_THROWS_AS(QuadForm(2.5, 0.0), std::invalid_argument);
    CHECK_NOTHROW(QuadForm(2.5, 0.0, /*allow_out_of_range=*/true));
    CHECK_THROWS_AS(count_small_combos(QuadForm(0.0, 0.0), 5, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("form serializes to json") {
    QuadForm f = QuadForm::sample_generic(3);
    const std::string j = f.to_json();
    CHECK(j.find("\"alpha\":") != std::string::npos);
    CHECK(j.find("\"beta\":") != std::string::npos);
    CHECK(j.find("\"seed\":3") != std::string::npos);
}
