#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <optional>

#include "toruslab/lattice_minima.hpp"

using namespace toruslab;

namespace {

const CutoffProfile chi{};

// Exhaustive oracle: every |n_i| <= span*N, every m within +-2 of t L_i(n),
// plus the pure-m unit vectors; exact dyadic F throughout, ties broken by the
// lexicographic rule on (|n1|,|n2|,|m1|,|m2|).
struct OracleSel {
    bool have = false;
    std::array<long long, 4> v{};
    exact::Dyadic f;
    std::array<long long, 8> key{};

    void offer(const detail::ExactBox& ex, const std::array<long long, 4>& cand) {
        exact::Dyadic fc = ex.scaled_f(cand);
        const auto k = detail::lex_key(cand);
        if (!have) { have = true; v = cand; f = fc; key = k; return; }
        const int c = exact::compare(fc, f);
        if (c < 0 || (c == 0 && k < key)) { v = cand; f = fc; key = k; }
    }
};

MinimaResult minima_oracle(const BoxNormParams& p, long long span = 8) {
    detail::ExactBox ex(p);
    const long long R = span * p.N;
    auto enumerate = [&](auto&& offer) {
        for (long long n1 = -R; n1 <= R; ++n1)
            for (long long n2 = -R; n2 <= R; ++n2) {
                if (n1 == 0 && n2 == 0) continue;
                const auto [L1, L2] = linear_forms(p.form, LatticePoint{n1, n2});
                const long long m1c = std::llround(p.t * L1);
                const long long m2c = std::llround(p.t * L2);
                for (long long d1 = -2; d1 <= 2; ++d1)
                    for (long long d2 = -2; d2 <= 2; ++d2)
                        offer(std::array<long long, 4>{n1, n2, m1c + d1, m2c + d2});
            }
        offer(std::array<long long, 4>{0, 0, 1, 0});
        offer(std::array<long long, 4>{0, 0, 0, 1});
    };
    OracleSel s1;
    enumerate([&](const std::array<long long, 4>& v) { s1.offer(ex, v); });
    REQUIRE(s1.have);
    OracleSel s2;
    enumerate([&](const std::array<long long, 4>& v) {
        if (detail::rank_two(s1.v, v)) s2.offer(ex, v);
    });
    REQUIRE(s2.have);
    MinimaResult out;
    out.m1 = s1.f.to_double() / p.N;
    out.m2 = s2.f.to_double() / p.N;
    out.v1 = s1.v;
    out.v2 = s2.v;
    return out;
}

}  // namespace

TEST_CASE("box norm basics") {
    QuadForm f = QuadForm::sample_generic(51);
    BoxNormParams p{f, 8, 0.0};
    CHECK(box_norm(p, {1, 0}, 0, 0) == Catch::Approx(1.0 / 8).epsilon(1e-15));
    CHECK(box_norm(p, {0, 0}, 1, 0) == 8.0);
    // homogeneity under integer scaling
    BoxNormParams pt{f, 8, 1.37};
    for (long long lam : {2, 3, -5}) {
        const double base = box_norm(pt, {1, 2}, 3, -1);
        CHECK(box_norm(pt, {lam * 1, lam * 2}, lam * 3, lam * -1) ==
              Catch::Approx(std::llabs(lam) * base).epsilon(1e-12));
    }
}

TEST_CASE("successive minima at t=0") {
    QuadForm f = QuadForm::sample_generic(52);
    BoxNormParams p{f, 8, 0.0};
    const MinimaResult r = successive_minima(p, 1.0);
    CHECK(r.m1 == Catch::Approx(1.0 / 8).epsilon(1e-15));
    CHECK(r.m2 == Catch::Approx(1.0 / 8).epsilon(1e-15));
    const std::array<long long, 4> e1{1, 0, 0, 0}, e2{0, 1, 0, 0};
    const bool match = (r.v1 == e1 && r.v2 == e2) || (r.v1 == e2 && r.v2 == e1);
    CHECK(match);
}

TEST_CASE("integer coefficient forms are 1-periodic in t") {
    QuadForm f(-2.0, 1.0);  // integer entries; L_i(n) is integral
    for (double t : {0.3, 1.7, 2.44}) {
        BoxNormParams a{f, 8, t}, b{f, 8, t + 1.0};
        const MinimaResult ra = successive_minima_auto(a);
        const MinimaResult rb = successive_minima_auto(b);
        CHECK(ra.m1 == Catch::Approx(rb.m1).epsilon(1e-12));
        CHECK(ra.m2 == Catch::Approx(rb.m2).epsilon(1e-12));
    }
}

TEST_CASE("fast path equals the exhaustive rational oracle") {
    for (std::uint64_t seed : {61ULL, 62ULL, 63ULL, 64ULL, 65ULL}) {
        QuadForm f = QuadForm::sample_generic(seed);
        BoxNormParams p{f, 8, 3.7};
        const MinimaResult fast = successive_minima_auto(p);
        const MinimaResult slow = minima_oracle(p);
        CHECK(fast.v1 == slow.v1);
        CHECK(fast.v2 == slow.v2);
        CHECK(fast.m1 == Catch::Approx(slow.m1).margin(1e-12));
        CHECK(fast.m2 == Catch::Approx(slow.m2).margin(1e-12));
    }
}

TEST_CASE("minima invariants and monotonicity in N") {
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        QuadForm f = QuadForm::sample_generic(700 + trial);
        const double t = rng.uniform(0.0, 30.0);
        BoxNormParams p8{f, 8, t}, p16{f, 16, t};
        const MinimaResult a = successive_minima_auto(p8);
        const MinimaResult b = successive_minima_auto(p16);
        CHECK(a.m1 <= a.m2);
        CHECK(a.m1 > 0.0);
        CHECK(detail::rank_two(a.v1, a.v2));
        CHECK(box_norm(p8, {a.v1[0], a.v1[1]}, a.v1[2], a.v1[3]) == Catch::Approx(a.m1).margin(1e-12));
        CHECK(box_norm(p8, {a.v2[0], a.v2[1]}, a.v2[2], a.v2[3]) == Catch::Approx(a.m2).margin(1e-12));
        // Doubling N changes each F component by at most a factor 2, so M1 can
        // grow by at most that factor. (It usually shrinks, but not always:
        // seed 700, t~26.9 has m1(8)=0.41 < m1(16)=0.50.)
        CHECK(b.m1 <= 2.0 * a.m1 + 1e-12);
    }
}

TEST_CASE("radius control") {
    QuadForm f = QuadForm::sample_generic(53);
    BoxNormParams p{f, 8, 2.13};
    CHECK_THROWS_AS(successive_minima(p, 0.5), std::invalid_argument);
    // The unit-radius ball has volume 2^4, so the first minimum never exceeds
    // 1; in practice the second does not either. Check that radius 1 succeeds
    // across a sweep and agrees with the auto-escalating entry point.
    Rng rng(531);
    for (int trial = 0; trial < 50; ++trial) {
        QuadForm g = QuadForm::sample_generic(5300 + trial);
        BoxNormParams q{g, trial % 2 == 0 ? 4 : 8, rng.uniform(0.0, 50.0)};
        const MinimaResult direct = successive_minima(q, 1.0);
        const MinimaResult autod = successive_minima_auto(q);
        CHECK(direct.v1 == autod.v1);
        CHECK(direct.v2 == autod.v2);
        CHECK(direct.m1 <= 1.0);
    }
}

TEST_CASE("davenport ratio at t=0 equals the cutoff-sum formula") {
    QuadForm f = QuadForm::sample_generic(54);
    const int N = 8;
    double s = 0.0;
    for (int n = -(N - 1); n <= N - 1; ++n) s += chi(static_cast<double>(n) / N);
    const double expect = std::pow(s, 4) / std::pow(static_cast<double>(N), 4);
    BoxNormParams p{f, N, 0.0};
    CHECK(davenport_ratio(p, chi, 8) == Catch::Approx(expect).epsilon(1e-9));
    CHECK(expect >= 1.0);
    CHECK(expect <= 20.3);
}

TEST_CASE("minima csv header") {
    std::vector<MinimaSweepRow> rows{{8, 1.0, 0.1, 0.2, 3.0, 0.5, 9}};
    const std::string csv = minima_csv(rows);
    CHECK(csv.rfind("N,t,m1,m2,sup_abs,davenport_ratio,seed\n", 0) == 0);
}
