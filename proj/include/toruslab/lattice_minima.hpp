#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toruslab/quadform.hpp"
#include "toruslab/weyl_kernel.hpp"

// Minkowski successive minima of the box norm
//
//   F(n,m) = max( |n_i|/N , N |t L_i(n) - m_i| ),   (n,m) in Z^4,
//
// and the Davenport-type kernel check |K_N|^2 <= C N^2/(M1 M2).
//
// Coefficients alpha, beta and the time t are doubles, hence exact dyadic
// rationals; near-ties in F are adjudicated in exact arithmetic so the
// enumeration and the exhaustive oracle can never disagree through rounding.

namespace toruslab {

namespace exact {

using bigint = boost::multiprecision::cpp_int;

/// Dyadic value num * 2^exp (num carries the sign).
struct Dyadic {
    bigint num;
    int exp = 0;

    static Dyadic from_double(double x) {
        Dyadic d;
        if (x == 0.0) return d;
        int e = 0;
        const double m = std::frexp(std::fabs(x), &e);  // m in [1/2,1)
        d.num = bigint(static_cast<long long>(std::ldexp(m, 53)));
        if (x < 0) d.num = -d.num;
        d.exp = e - 53;
        return d;
    }

    static Dyadic from_int(long long v) {
        Dyadic d;
        d.num = v;
        return d;
    }

    Dyadic operator*(const Dyadic& o) const { return {num * o.num, exp + o.exp}; }

    Dyadic operator+(const Dyadic& o) const {
        const int e = std::min(exp, o.exp);
        return {(num << static_cast<unsigned>(exp - e)) + (o.num << static_cast<unsigned>(o.exp - e)), e};
    }

    Dyadic operator-(const Dyadic& o) const {
        const int e = std::min(exp, o.exp);
        return {(num << static_cast<unsigned>(exp - e)) - (o.num << static_cast<unsigned>(o.exp - e)), e};
    }

    Dyadic abs() const { return {num < 0 ? bigint(-num) : num, exp}; }

    double to_double() const { return num == 0 ? 0.0 : std::ldexp(num.convert_to<double>(), exp); }
};

inline int compare(const Dyadic& a, const Dyadic& b) {
    const int e = std::min(a.exp, b.exp);
    const bigint av = a.num << static_cast<unsigned>(a.exp - e);
    const bigint bv = b.num << static_cast<unsigned>(b.exp - e);
    return av < bv ? -1 : (bv < av ? 1 : 0);
}

}  // namespace exact

struct BoxNormParams {
    QuadForm form;
    int N = 1;
    double t = 0.0;
};

/// F(n,m) in plain double arithmetic (screening / reporting).
inline double box_norm(const BoxNormParams& p, const LatticePoint& n, long long m1, long long m2) {
    if (p.N < 1) throw std::invalid_argument("box_norm: N must be >= 1");
    const auto [L1, L2] = linear_forms(p.form, n);
    const double Nd = static_cast<double>(p.N);
    const double a = std::fabs(static_cast<double>(n.k1)) / Nd;
    const double b = std::fabs(static_cast<double>(n.k2)) / Nd;
    const double c = Nd * std::fabs(p.t * L1 - static_cast<double>(m1));
    const double d = Nd * std::fabs(p.t * L2 - static_cast<double>(m2));
    return std::fmax(std::fmax(a, b), std::fmax(c, d));
}

struct MinimaResult {
    double m1 = 0.0;
    double m2 = 0.0;
    std::array<long long, 4> v1{};  // (n1,n2,m1,m2)
    std::array<long long, 4> v2{};
};

struct RadiusTooSmall : std::runtime_error {
    double best_found;
    explicit RadiusTooSmall(double best)
        : std::runtime_error("successive_minima: fewer than 2 independent vectors within radius"),
          best_found(best) {}
};

namespace detail {

/// Exact N*F value of a candidate: max(|n_i|, N^2 |t L_i(n) - m_i|).
struct ExactBox {
    exact::Dyadic t, a, b;
    long long N;

    explicit ExactBox(const BoxNormParams& p)
        : t(exact::Dyadic::from_double(p.t)),
          a(exact::Dyadic::from_double(p.form.alpha())),
          b(exact::Dyadic::from_double(p.form.beta())),
          N(p.N) {}

    exact::Dyadic scaled_f(const std::array<long long, 4>& v) const {
        using exact::Dyadic;
        const Dyadic n1 = Dyadic::from_int(v[0]), n2 = Dyadic::from_int(v[1]);
        const Dyadic L1 = n1 + b * n2;
        const Dyadic L2 = b * n1 + a * n2;
        const Dyadic NN = Dyadic::from_int(N * N);
        const Dyadic c1 = (NN * ((t * L1) - Dyadic::from_int(v[2]))).abs();
        const Dyadic c2 = (NN * ((t * L2) - Dyadic::from_int(v[3]))).abs();
        Dyadic best = Dyadic::from_int(std::llabs(v[0]));
        const Dyadic an2 = Dyadic::from_int(std::llabs(v[1]));
        if (exact::compare(an2, best) > 0) best = an2;
        if (exact::compare(c1, best) > 0) best = c1;
        if (exact::compare(c2, best) > 0) best = c2;
        return best;
    }
};

/// Tie-break key: lexicographic on (|n1|,|n2|,|m1|,|m2|), then on the signed
/// entries (largest first) so that +-v pairs resolve deterministically.
inline std::array<long long, 8> lex_key(const std::array<long long, 4>& v) {
    return {std::llabs(v[0]), std::llabs(v[1]), std::llabs(v[2]), std::llabs(v[3]),
            -v[0], -v[1], -v[2], -v[3]};
}

inline bool rank_two(const std::array<long long, 4>& u, const std::array<long long, 4>& v) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const __int128 m = static_cast<__int128>(u[i]) * v[j] - static_cast<__int128>(u[j]) * v[i];
            if (m != 0) return true;
        }
    return false;
}

/// Streaming minimum: candidates are screened with the double-precision F and
/// near-ties (relative window 1e-9, far above rounding error) are collected
/// for exact adjudication by (F, lex key).
class MinSelector {
  public:
    void offer(const std::array<long long, 4>& v, double f_double) {
        if (!have_ || f_double < best_d_ * (1.0 - kWindow)) {
            have_ = true;
            best_d_ = f_double;
            ties_.assign(1, v);
        } else if (f_double <= best_d_ * (1.0 + kWindow)) {
            ties_.push_back(v);
            if (f_double < best_d_) best_d_ = f_double;
        }
    }

    bool resolve(const ExactBox& ex, std::array<long long, 4>& out, exact::Dyadic& out_f) const {
        if (!have_) return false;
        bool first = true;
        std::array<long long, 8> key{};
        for (const auto& v : ties_) {
            exact::Dyadic f = ex.scaled_f(v);
            if (first) { first = false; out = v; out_f = f; key = lex_key(v); continue; }
            const int c = exact::compare(f, out_f);
            if (c < 0 || (c == 0 && lex_key(v) < key)) { out = v; out_f = f; key = lex_key(v); }
        }
        return true;
    }

  private:
    static constexpr double kWindow = 1e-9;
    bool have_ = false;
    double best_d_ = 0.0;
    std::vector<std::array<long long, 4>> ties_;
};

template <typename Visit>
void enumerate_candidates(const BoxNormParams& p, double radius, Visit&& visit) {
    const long long R = static_cast<long long>(std::ceil(radius * p.N));
    const long long W = static_cast<long long>(radius / p.N) + 1;
    for (long long n1 = -R; n1 <= R; ++n1)
        for (long long n2 = -R; n2 <= R; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            const auto [L1, L2] = linear_forms(p.form, LatticePoint{n1, n2});
            const long long m1c = std::llround(p.t * L1);
            const long long m2c = std::llround(p.t * L2);
            for (long long d1 = -W; d1 <= W; ++d1)
                for (long long d2 = -W; d2 <= W; ++d2)
                    visit(std::array<long long, 4>{n1, n2, m1c + d1, m2c + d2});
        }
    // the n = 0 column: pure-m vectors, norm N
    visit(std::array<long long, 4>{0, 0, 1, 0});
    visit(std::array<long long, 4>{0, 0, 0, 1});
}

}  // namespace detail

/// Successive minima M1 <= M2 of F over Z^4 \ {0}. Enumerates |n_i| <=
/// radius*N with m near round(t L_i(n)); exhaustive for minima < radius
/// (a candidate with F < radius has |n_i| < radius*N and |t L_i - m_i| <
/// radius/N, so it lies inside the enumerated window). Throws RadiusTooSmall
/// when fewer than two independent vectors lie within radius.
inline MinimaResult successive_minima(const BoxNormParams& p, double radius) {
    if (p.N < 1) throw std::invalid_argument("successive_minima: N must be >= 1");
    if (!(radius >= 1.0)) throw std::invalid_argument("successive_minima: radius must be >= 1");
    detail::ExactBox ex(p);

    detail::MinSelector sel1;
    detail::enumerate_candidates(p, radius, [&](const std::array<long long, 4>& v) {
        sel1.offer(v, box_norm(p, LatticePoint{v[0], v[1]}, v[2], v[3]));
    });
    std::array<long long, 4> v1{};
    exact::Dyadic f1;
    if (!sel1.resolve(ex, v1, f1)) throw RadiusTooSmall(std::numeric_limits<double>::infinity());

    detail::MinSelector sel2;
    detail::enumerate_candidates(p, radius, [&](const std::array<long long, 4>& v) {
        if (detail::rank_two(v1, v))
            sel2.offer(v, box_norm(p, LatticePoint{v[0], v[1]}, v[2], v[3]));
    });
    std::array<long long, 4> v2{};
    exact::Dyadic f2;
    if (!sel2.resolve(ex, v2, f2)) throw RadiusTooSmall(f1.to_double() / p.N);

    MinimaResult out;
    out.m1 = f1.to_double() / static_cast<double>(p.N);
    out.m2 = f2.to_double() / static_cast<double>(p.N);
    out.v1 = v1;
    out.v2 = v2;
    if (out.m1 > radius || out.m2 > radius) throw RadiusTooSmall(out.m1);
    return out;
}

/// successive_minima with the search radius doubled until it succeeds
/// (radius N always does: the two pure-m unit vectors qualify).
inline MinimaResult successive_minima_auto(const BoxNormParams& p) {
    double radius = 1.0;
    for (;;) {
        try {
            return successive_minima(p, radius);
        } catch (const RadiusTooSmall&) {
            if (radius > p.N) throw;
            radius *= 2.0;
        }
    }
}

/// sup_x |K_N(t,x)|^2 * M1 * M2 / N^2, the Davenport-type bound ratio.
inline double davenport_ratio(const BoxNormParams& p, const CutoffProfile& chi, int oversample) {
    const MinimaResult mm = successive_minima_auto(p);
    const double sup = sup_over_x(p.form, chi, p.N, p.t, oversample, 2).sup_abs;
    return sup * sup * mm.m1 * mm.m2 / (static_cast<double>(p.N) * p.N);
}

struct MinimaSweepRow {
    int N = 0;
    double t = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    double sup_abs = 0.0;
    double davenport_ratio = 0.0;
    std::uint64_t seed = 0;
};

inline std::string minima_csv(const std::vector<MinimaSweepRow>& rows) {
    std::string out = "N,t,m1,m2,sup_abs,davenport_ratio,seed\n";
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%llu\n", r.N, r.t, r.m1, r.m2,
                      r.sup_abs, r.davenport_ratio, static_cast<unsigned long long>(r.seed));
        out += line;
    }
    return out;
}

}  // namespace toruslab
