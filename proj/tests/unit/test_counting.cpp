#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "toruslab/counting.hpp"
#include "toruslab/rng.hpp"

using namespace toruslab;

namespace {

// Direct nested enumeration of the Omega count (no splitting).
long long omega_naive(const OmegaQuery& q) {
    const long long M = q.N - 1;
    long long total = 0;
    std::vector<std::array<long long, 5>> acc{{0, 0, 0, 0, 0}};
    for (int i = 0; i < q.q; ++i) {
        std::vector<std::array<long long, 5>> next;
        const long long s = q.signs[i];
        for (const auto& base : acc)
            for (long long k = -M; k <= M; ++k)
                for (long long l = -M; l <= M; ++l)
                    next.push_back({base[0] + s * k, base[1] + s * l, base[2] + s * k * k,
                                    base[3] + s * l * l, base[4] + s * k * l});
        acc = std::move(next);
    }
    for (const auto& t : acc)
        if (t[0] == q.a && t[1] == q.b && t[2] == q.A && t[3] == q.B && t[4] == q.C) ++total;
    return total;
}

// Independent 4-variable enumeration for the weighted pair form.
long long weighted5_oracle(long long Ap, long long Bp, long long Cp) {
    std::vector<std::array<long long, 4>> xs;
    const long long r = isqrt_ll(Ap), rd = isqrt_ll(Ap / 5);
    for (long long a = -r; a <= r; ++a)
        for (long long b = -r; b <= r; ++b)
            for (long long c = -r; c <= r; ++c)
                for (long long d = -rd; d <= rd; ++d)
                    if (a * a + b * b + c * c + 5 * d * d == Ap) xs.push_back({a, b, c, d});
    std::vector<std::array<long long, 4>> ys;
    const long long rb = isqrt_ll(Bp), rbd = isqrt_ll(Bp / 5);
    for (long long a = -rb; a <= rb; ++a)
        for (long long b = -rb; b <= rb; ++b)
            for (long long c = -rb; c <= rb; ++c)
                for (long long d = -rbd; d <= rbd; ++d)
                    if (a * a + b * b + c * c + 5 * d * d == Bp) ys.push_back({a, b, c, d});
    long long cnt = 0;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + 5 * x[3] * y[3] == Cp) ++cnt;
    return cnt;
}

}  // namespace

TEST_CASE("r3 representation counts") {
    CHECK(r3_count(0) == 1);
    CHECK(r3_count(1) == 6);
    CHECK(r3_count(2) == 12);
    CHECK(r3_count(3) == 8);
    CHECK(r3_count(7) == 0);
    CHECK(r3_count(9) == 30);
    R3Table table(16);
    for (long long n = 0; n <= 16; ++n)
        CHECK(static_cast<long long>(table.vectors(n).size()) == r3_count(n));
}

TEST_CASE("omega: q=1 pins a single point") {
    OmegaQuery q{1, 4, {1}, 2, -1, 4, 1, -2};
    CHECK(omega_count(q) == 1);
    q.A = 5;  // 2^2 != 5
    CHECK(omega_count(q) == 0);
    OmegaQuery out_of_range{1, 3, {1}, 3, 0, 9, 0, 0};  // |a| >= N
    CHECK(omega_count(out_of_range) == 0);
}

TEST_CASE("omega: swap symmetry between the two coordinates") {
    Rng rng(81);
    for (int i = 0; i < 30; ++i) {
        OmegaQuery q{3, 3, {1, -1, 1}, 0, 0, 0, 0, 0};
        q.a = static_cast<long long>(rng.below(9)) - 4;
        q.b = static_cast<long long>(rng.below(9)) - 4;
        q.A = static_cast<long long>(rng.below(17)) - 8;
        q.B = static_cast<long long>(rng.below(17)) - 8;
        q.C = static_cast<long long>(rng.below(17)) - 8;
        OmegaQuery sw = q;
        std::swap(sw.a, sw.b);
        std::swap(sw.A, sw.B);
        CHECK(omega_count(q) == omega_count(sw));
    }
}

TEST_CASE("omega: meet-in-the-middle equals naive enumeration") {
    OmegaQuery ex{2, 3, {1, 1}, 0, 0, 2, 2, 2};
    CHECK(omega_count(ex) == omega_naive(ex));
    CHECK(omega_count(ex) > 0);
    Rng rng(83);
    for (int q = 1; q <= 3; ++q)
        for (long long N = 2; N <= 4; ++N)
            for (int trial = 0; trial < 40; ++trial) {
                OmegaQuery qr;
                qr.q = q;
                qr.N = N;
                qr.signs.assign(q, 1);
                if (trial % 2 == 1)
                    for (int i = 0; i < q; ++i) qr.signs[i] = (i % 2 == 0) ? -1 : 1;
                const long long lim1 = q * (N - 1), lim2 = q * (N - 1) * (N - 1);
                qr.a = static_cast<long long>(rng.below(2 * lim1 + 1)) - lim1;
                qr.b = static_cast<long long>(rng.below(2 * lim1 + 1)) - lim1;
                qr.A = static_cast<long long>(rng.below(2 * lim2 + 1)) - lim2;
                qr.B = static_cast<long long>(rng.below(2 * lim2 + 1)) - lim2;
                qr.C = static_cast<long long>(rng.below(2 * lim2 + 1)) - lim2;
                CHECK(omega_count(qr) == omega_naive(qr));
            }
}

TEST_CASE("omega query validation") {
    CHECK_THROWS_AS(omega_count(OmegaQuery{7, 2, {1, 1, 1, 1, 1, 1, 1}, 0, 0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(omega_count(OmegaQuery{2, 2, {1}, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(omega_count(OmegaQuery{2, 2, {1, 2}, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("kookaburra change of variables") {
    // all-zero quadruple
    auto z = kookaburra_map({LatticePoint{0, 0}, {0, 0}, {0, 0}, {0, 0}}, 0, 0);
    CHECK(z.Ap == 0);
    CHECK(z.kpp == std::array<long long, 3>{0, 0, 0});
    // constant k drops out entirely
    auto c = kookaburra_map({LatticePoint{1, 0}, {1, 0}, {1, 0}, {1, 0}}, 4, 0);
    CHECK(c.kpp == std::array<long long, 3>{0, 0, 0});
    CHECK(c.Ap == 0);
    // worked example: k = (1,0,0,0), l = (0,1,0,0), a = b = 1
    auto w = kookaburra_map({LatticePoint{1, 0}, {0, 1}, {0, 0}, {0, 0}}, 1, 1);
    CHECK(w.kpp == std::array<long long, 3>{-2, 2, 2});
    CHECK(w.lpp == std::array<long long, 3>{2, -2, 2});
    CHECK(w.Ap == 12);
    CHECK(w.Bp == 12);
    CHECK(w.Cp == -4);
    // precondition violations
    CHECK_THROWS_AS(kookaburra_map({LatticePoint{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0, 0),
                    std::invalid_argument);
    // identities hold on random quadruples (checked inside the op)
    Rng rng(85);
    for (int i = 0; i < 100000; ++i) {
        std::array<LatticePoint, 4> quad;
        long long a = 0, b = 0;
        for (auto& pt : quad) {
            pt.k1 = static_cast<long long>(rng.below(21)) - 10;
            pt.k2 = static_cast<long long>(rng.below(21)) - 10;
            a += pt.k1;
            b += pt.k2;
        }
        CHECK_NOTHROW(kookaburra_map(quad, a, b));
    }
}

TEST_CASE("kookaburra is injective given the sums (round trip)") {
    Rng rng(86);
    auto invert = [](const KookaburraResult& r, long long a, long long b) {
        std::array<LatticePoint, 4> quad;
        const long long kp1 = (-r.kpp[0] + r.kpp[1] + r.kpp[2]) / 2;
        const long long kp2 = (r.kpp[0] - r.kpp[1] + r.kpp[2]) / 2;
        const long long kp3 = (r.kpp[0] + r.kpp[1] - r.kpp[2]) / 2;
        const long long kp4 = -(kp1 + kp2 + kp3);
        const long long lp1 = (-r.lpp[0] + r.lpp[1] + r.lpp[2]) / 2;
        const long long lp2 = (r.lpp[0] - r.lpp[1] + r.lpp[2]) / 2;
        const long long lp3 = (r.lpp[0] + r.lpp[1] - r.lpp[2]) / 2;
        const long long lp4 = -(lp1 + lp2 + lp3);
        const long long kps[4] = {kp1, kp2, kp3, kp4};
        const long long lps[4] = {lp1, lp2, lp3, lp4};
        for (int i = 0; i < 4; ++i) quad[i] = {(kps[i] + a) / 4, (lps[i] + b) / 4};
        return quad;
    };
    // exhaustive at N=3
    const long long M = 2;
    for (long long k1 = -M; k1 <= M; ++k1)
        for (long long k2 = -M; k2 <= M; ++k2)
            for (long long k3 = -M; k3 <= M; ++k3)
                for (long long k4 = -M; k4 <= M; ++k4)
                    for (long long l1 = -M; l1 <= M; ++l1)
                        for (long long l2 = -M; l2 <= M; ++l2) {
                            std::array<LatticePoint, 4> quad{
                                LatticePoint{k1, l1}, {k2, l2}, {k3, -l1}, {k4, l2}};
                            const long long a = k1 + k2 + k3 + k4;
                            const long long b = l2 + l2;
                            auto r = kookaburra_map(quad, a, b);
                            auto back = invert(r, a, b);
                            CHECK(back == quad);
                        }
    // random spot checks at N=4
    for (int i = 0; i < 10000; ++i) {
        std::array<LatticePoint, 4> quad;
        long long a = 0, b = 0;
        for (auto& pt : quad) {
            pt.k1 = static_cast<long long>(rng.below(7)) - 3;
            pt.k2 = static_cast<long long>(rng.below(7)) - 3;
            a += pt.k1;
            b += pt.k2;
        }
        auto r = kookaburra_map(quad, a, b);
        CHECK(invert(r, a, b) == quad);
    }
}

TEST_CASE("square divisor h") {
    CHECK(square_divisor_h(4, 8, 12) == 2);
    CHECK(square_divisor_h(1, 1, 0) == 1);
    CHECK(square_divisor_h(18, 36, 9) == 3);
    CHECK_THROWS_AS(square_divisor_h(0, 0, 0), std::invalid_argument);
}

TEST_CASE("chi factors: worked example (2,2,1)") {
    const PallFactorization f = pall_factorize(2, 2, 1);
    CHECK(f.k == 1);
    CHECK(f.Delta == 3);
    CHECK(f.nu == 1);
    REQUIRE(f.per_prime.size() == 1);
    const PallPrime& p3 = f.per_prime[0];
    CHECK(p3.p == 3);
    CHECK(p3.u1 == 0);
    CHECK(p3.u2 == 1);
    CHECK(p3.delta1 == 0);
    CHECK(p3.kappa1 == Rational(1));
    CHECK(p3.kappa2 == Rational(1));
    CHECK(p3.chi == Rational(1));
    CHECK(chi_odd_p(2, 2, 1, 3) == Rational(1));
}

TEST_CASE("chi factors: odd u1 with even residual forces the kappa2=0 rows") {
    // (4,4,2): k=2, Delta=3; p=3 has u1=0,u2=1 and vanishing chi
    CHECK(pall_count(4, 4, 2) == 0);
    CHECK(brute_pair_count(4, 4, 2) == 0);
    // (6,27,0): k=3, Delta=18; p=3 has u1=1,u2=3 (both odd) and chi(3)=1
    CHECK(pall_count(6, 27, 0) == 48);
    CHECK(brute_pair_count(6, 27, 0) == 48);
    // (5,10,0): k=5 odd against Delta=2 free of 5: chi(5)=0
    CHECK(pall_count(5, 10, 0) == 0);
    CHECK(brute_pair_count(5, 10, 0) == 0);
}

TEST_CASE("pall formula worked counts") {
    CHECK(pall_count(1, 1, 0) == 24);
    CHECK(pall_count(2, 2, 1) == 48);
    CHECK(brute_pair_count(1, 1, 0) == 24);
    CHECK(brute_pair_count(2, 2, 1) == 48);
    CHECK_THROWS_AS(pall_count(-1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(pall_count(2, 2, 2), std::invalid_argument);  // determinant zero
}

TEST_CASE("pall equals brute force on a small sweep") {
    R3Table table(40 + 1);
    for (long long A = 1; A <= 40; ++A)
        for (long long B = A; B <= 40; ++B) {
            std::map<long long, long long> hist;
            for (const auto& x : table.vectors(A))
                for (const auto& y : table.vectors(B))
                    ++hist[static_cast<long long>(x[0]) * y[0] + static_cast<long long>(x[1]) * y[1] +
                           static_cast<long long>(x[2]) * y[2]];
            const long long cmax = isqrt_ll(A * B);
            for (long long C = -cmax; C <= cmax; ++C) {
                if (A * B - C * C <= 0) continue;
                auto it = hist.find(C);
                const long long brute = it == hist.end() ? 0 : it->second;
                CHECK(pall_count(A, B, C) == brute);
            }
        }
}

TEST_CASE("brute pair counts: edges and the weighted variant") {
    CHECK(brute_pair_count(0, 0, 0) == 1);
    CHECK(brute_pair_count(1, 0, 0) == 6);
    CHECK(brute_pair_count(4, 1, 2) == 6);
    CHECK_THROWS_AS(brute_pair_count(-1, 2, 0), std::invalid_argument);
    for (auto [A, B, C] : {std::array<long long, 3>{1, 1, 1}, {5, 5, 5}, {5, 5, -5}, {6, 9, 2}}) {
        CHECK(brute_pair_count(A, B, C, PairKind::ThreeSquaresPlus5) == weighted5_oracle(A, B, C));
    }
    CHECK(brute_pair_count(1, 1, 1, PairKind::ThreeSquaresPlus5) == 6);
}

TEST_CASE("degenerate rank-one targets") {
    auto d1 = degenerate_split(4, 1, 2);
    CHECK(d1.is_rank_one);
    CHECK(d1.consistent);
    CHECK(d1.p == 2);
    CHECK(d1.q == 1);
    CHECK(d1.m == 1);
    CHECK(d1.count == 6);
    CHECK(d1.count == brute_pair_count(4, 1, 2));
    auto d2 = degenerate_split(1, 1, 1);
    CHECK(d2.count == 6);
    auto d3 = degenerate_split(2, 8, -4);
    CHECK(d3.p == 1);
    CHECK(d3.q == 2);
    CHECK(d3.m == 2);
    CHECK(d3.count == 12);
    CHECK(d3.count == brute_pair_count(2, 8, -4));
    // equal norms force y = x on the Cauchy-Schwarz surface
    auto eq = degenerate_split(2, 2, 2);
    CHECK(eq.is_rank_one);
    CHECK(eq.consistent);
    CHECK(eq.count == 12);
    CHECK(brute_pair_count(2, 2, 2) == 12);
    // coprime cofactors of a square are squares, so exact integral surface
    // data always splits; m can still be a non-represented number
    auto none = degenerate_split(7, 7, 7);
    CHECK(none.consistent);
    CHECK(none.count == 0);
    CHECK(brute_pair_count(7, 7, 7) == 0);
    CHECK_THROWS_AS(degenerate_split(2, 3, 1), std::invalid_argument);
    // axis-degenerate targets
    auto ax = degenerate_split(0, 9, 0);
    CHECK(ax.consistent);
    CHECK(ax.count == r3_count(9));
}

TEST_CASE("dyadic local densities stabilize where the count is positive") {
    // Solution counts of the three congruences mod 2^e; once e passes the
    // dyadic content v2(2 k Delta) of the data, counts grow exactly by the
    // 2^3 scaling per level. Both samples here have that content <= 1.
    for (auto [A, B, C] : {std::array<long long, 3>{1, 1, 0}, {2, 2, 1}}) {
        const long long c3 = pair_solutions_mod_2e(A, B, C, 3);
        const long long c4 = pair_solutions_mod_2e(A, B, C, 4);
        CHECK(c3 > 0);
        CHECK(c4 == 8 * c3);
    }
    // 2-adically empty systems: vanish at every level (the vanishing is
    // carried by an odd factor in the product formula, cf. (5,10,0) above)
    CHECK(pair_solutions_mod_2e(5, 10, 0, 3) == 0);
    CHECK(pair_solutions_mod_2e(5, 10, 0, 4) == 0);
    CHECK(pair_solutions_mod_2e(3, 3, 0, 3) == 0);
}

TEST_CASE("twite-style bound on the small sweep") {
    R3Table table(60 + 1);
    double worst = 0.0;
    for (long long A = 1; A <= 60; ++A)
        for (long long B = A; B <= 60; ++B) {
            std::map<long long, long long> hist;
            for (const auto& x : table.vectors(A))
                for (const auto& y : table.vectors(B))
                    ++hist[static_cast<long long>(x[0]) * y[0] + static_cast<long long>(x[1]) * y[1] +
                           static_cast<long long>(x[2]) * y[2]];
            for (const auto& [C, cnt] : hist) {
                if (A * B - C * C <= 0) continue;
                const double h = static_cast<double>(square_divisor_h(A, B, C));
                const double ratio = cnt / (std::pow(static_cast<double>(A * B), 0.1) * h);
                worst = std::max(worst, ratio);
            }
        }
    CHECK(worst <= 200.0);
}
