#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toruslab/cutoff.hpp"
#include "toruslab/fft.hpp"
#include "toruslab/parallel.hpp"
#include "toruslab/quadform.hpp"
#include "toruslab/weyl_kernel.hpp"

// Evolution of Fourier-supported data under the torus propagator: each
// coefficient picks up the unimodular phase e^{2 pi i t Q(k)}. Space-time L^p
// norms by quadrature, the conjectured and proven bound brackets, refocusing
// (almost-period) search, and the exponent-fitting helper used by every
// growth report.

namespace toruslab {

class FourierData {
  public:
    FourierData(int N, std::vector<LatticePoint> support, std::vector<std::complex<double>> amps)
        : N_(N), support_(std::move(support)), amps_(std::move(amps)) {
        if (N_ < 1) throw std::invalid_argument("FourierData: N must be >= 1");
        if (support_.size() != amps_.size())
            throw std::invalid_argument("FourierData: support/amplitude size mismatch");
        for (const auto& k : support_)
            if (k.k1 * k.k1 + k.k2 * k.k2 >= static_cast<long long>(N_) * N_)
                throw std::invalid_argument("FourierData: support point outside B(0,N)");
    }

    int N() const { return N_; }
    const std::vector<LatticePoint>& support() const { return support_; }
    const std::vector<std::complex<double>>& amps() const { return amps_; }
    std::vector<std::complex<double>>& amps() { return amps_; }

    double l2_norm() const {
        std::vector<double> sq(amps_.size());
        for (std::size_t i = 0; i < amps_.size(); ++i) sq[i] = std::norm(amps_[i]);
        return std::sqrt(pairwise_sum(sq));
    }

  private:
    int N_;
    std::vector<LatticePoint> support_;
    std::vector<std::complex<double>> amps_;
};

/// Multiply each amplitude by e^{2 pi i t Q(k)}; support unchanged.
inline FourierData evolve(const QuadForm& form, const FourierData& f, double t) {
    std::vector<std::complex<double>> amps = f.amps();
    for (std::size_t i = 0; i < amps.size(); ++i)
        amps[i] *= detail::unit_phase(t * eval_q(form, f.support()[i]));
    return FourierData(f.N(), f.support(), std::move(amps));
}

struct NormResult {
    double p = 2.0;
    double T = 1.0;
    int N = 1;
    double value = 0.0;
    int x_grid = 0;
    double t_step = 0.0;
};

/// Spatial means of |u(t_j, .)|^p on a 2^k x 2^k grid for a list of time
/// nodes (parallel over nodes, deterministic pairwise reduction is the
/// caller's job). For even p the mean is exact once the grid resolves every
/// frequency of |u|^p.
inline std::vector<double> lp_spatial_means(const QuadForm& form, const FourierData& f, double p,
                                            const std::vector<double>& nodes, std::size_t G) {
    auto plan = FftPlan::get(G);
    const auto& pts = f.support();
    std::vector<double> q_of_k(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) q_of_k[i] = eval_q(form, pts[i]);

    // distinct rows touched by the support (n1 mod G)
    std::vector<std::size_t> rows;
    {
        std::vector<char> seen(G, 0);
        for (const auto& k : pts) {
            const std::size_t r = static_cast<std::size_t>((k.k1 % (long long)G + G) % (long long)G);
            if (!seen[r]) { seen[r] = 1; rows.push_back(r); }
        }
    }

    const bool p_even_int = std::fabs(p - std::nearbyint(p)) < 1e-12 &&
                            (static_cast<long long>(std::nearbyint(p)) % 2 == 0);
    const int p_half = static_cast<int>(std::nearbyint(p)) / 2;

    std::vector<double> means(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t j) {
        thread_local std::vector<std::complex<double>> buf;
        buf.assign(G * G, std::complex<double>{0.0, 0.0});
        const double t = nodes[j];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::size_t r = static_cast<std::size_t>((pts[i].k1 % (long long)G + G) % (long long)G);
            const std::size_t c = static_cast<std::size_t>((pts[i].k2 % (long long)G + G) % (long long)G);
            buf[r * G + c] += f.amps()[i] * detail::unit_phase(t * q_of_k[i]);
        }
        for (std::size_t r : rows) plan->run(buf.data() + r * G);
        transpose_square(buf.data(), G);
        long double acc = 0.0L;
        for (std::size_t r = 0; r < G; ++r) {
            std::complex<double>* row = buf.data() + r * G;
            plan->run(row);
            if (p_even_int) {
                for (std::size_t c = 0; c < G; ++c) {
                    const double u2 = std::norm(row[c]);
                    double v = u2;
                    for (int m = 1; m < p_half; ++m) v *= u2;
                    acc += v;
                }
            } else {
                for (std::size_t c = 0; c < G; ++c) acc += std::pow(std::norm(row[c]), p / 2.0);
            }
        }
        means[j] = static_cast<double>(acc / static_cast<long double>(G * G));
    });
    return means;
}

/// || e^{it D} f ||_{L^p([0,T] x T^2)} by a fast transform on an x_grid^2
/// spatial grid per midpoint time node. For even p the spatial mean is exact
/// (the grid resolves every frequency of |u|^p); in general the contract is
/// self-convergence under step halving. Requires x_grid >= 4*(2N) and
/// t_step <= 1/(8 max(1,|alpha|,|beta|) N^2).
inline NormResult lp_spacetime_norm(const QuadForm& form, const FourierData& f, double p, double T,
                                    int x_grid, double t_step) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_spacetime_norm: p must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("lp_spacetime_norm: T must be > 0");
    const int N = f.N();
    if (x_grid < 8 * N) throw std::invalid_argument("lp_spacetime_norm: x_grid must be >= 4*(2N)");
    const double step_max = 1.0 / (8.0 * form.norm() * static_cast<double>(N) * N);
    if (!(t_step > 0.0) || t_step > step_max * (1.0 + 1e-12))
        throw std::invalid_argument("lp_spacetime_norm: t_step exceeds 1/(8 max(1,|a|,|b|) N^2)");

    const std::size_t G = next_pow2(static_cast<std::size_t>(x_grid));
    const long long M = static_cast<long long>(std::ceil(T / t_step));
    const double h = T / static_cast<double>(M);
    std::vector<double> nodes(static_cast<std::size_t>(M));
    for (long long j = 0; j < M; ++j) nodes[j] = (static_cast<double>(j) + 0.5) * h;
    const std::vector<double> means = lp_spatial_means(form, f, p, nodes, G);

    NormResult out;
    out.p = p;
    out.T = T;
    out.N = N;
    out.x_grid = static_cast<int>(G);
    out.t_step = h;
    out.value = std::pow(pairwise_sum(means) * h, 1.0 / p);
    return out;
}

// ---------------------------------------------------------------------------
// bound formulas

/// N^{d/2-(d+2)/p} + T^{1/p} sum_{n=0}^{d} N^{n/2-(n^2+2n)/p}, evaluated
/// exactly (subpolynomial slack belongs to the comparison harness, not here).
inline double conjecture_bound(int d, double p, int N, double T) {
    if (d < 1 || !(p >= 2.0) || N < 1 || !(T >= 1.0))
        throw std::invalid_argument("conjecture_bound: need d>=1, p>=2, N>=1, T>=1");
    const double Nd = static_cast<double>(N);
    double sum = 0.0;
    for (int n = 0; n <= d; ++n)
        sum += std::pow(Nd, 0.5 * n - static_cast<double>(n) * (n + 2) / p);
    return std::pow(Nd, 0.5 * d - (d + 2) / p) + std::pow(T, 1.0 / p) * sum;
}

/// The d=2 piecewise form of the same bound (reference table; cutoffs at
/// p = 4, 6, 10). Agrees with conjecture_bound(2,...) up to a factor <= 4.
inline double conjecture_piecewise_d2(double p, int N, double T) {
    if (!(p >= 2.0) || N < 1 || !(T >= 1.0))
        throw std::invalid_argument("conjecture_piecewise_d2: need p>=2, N>=1, T>=1");
    const double Nd = static_cast<double>(N);
    const double Tp = std::pow(T, 1.0 / p);
    if (p <= 4.0) return Tp;
    if (p <= 6.0) return Tp + std::pow(Nd, 1.0 - 4.0 / p);
    if (p <= 10.0) return Tp * std::pow(Nd, 0.5 - 3.0 / p) + std::pow(Nd, 1.0 - 4.0 / p);
    return std::pow(Nd, 1.0 - 8.0 / p) * Tp + std::pow(Nd, 1.0 - 4.0 / p);
}

struct TheoremBounds {
    double weyl = 0.0;                 // N^{1-4/p} + T^{1/p} N^{(2/3)(1-4/p)}
    std::optional<double> p8_10;       // for p >= 8: the sharp counting bound
};

inline TheoremBounds theorem_bounds(double p, int N, double T) {
    if (!(p > 4.0)) throw std::invalid_argument("theorem_bounds: p must be > 4");
    const double Nd = static_cast<double>(N);
    const double Tp = std::pow(T, 1.0 / p);
    TheoremBounds out;
    out.weyl = std::pow(Nd, 1.0 - 4.0 / p) + Tp * std::pow(Nd, (2.0 / 3.0) * (1.0 - 4.0 / p));
    if (p >= 8.0) {
        if (p <= 10.0)
            out.p8_10 = std::pow(Nd, 1.0 - 4.0 / p) + Tp * std::pow(Nd, 0.5 - 3.0 / p);
        else
            out.p8_10 = std::pow(Nd, 1.0 - 4.0 / p) + std::pow(Nd, 1.0 - 8.0 / p) * Tp;
    }
    return out;
}

// ---------------------------------------------------------------------------
// refocusing times

struct RefocusResult {
    long long q = 0;       // smallest almost-period found (best candidate if !found)
    double worst = 1.0;    // max(||q alpha||, ||q beta||) at q
    int N = 0;
    bool found = false;
};

/// Smallest q <= q_max with max(||q alpha||, ||q beta||) < 1/N^2 (the entry
/// alpha_11 = 1 contributes nothing). Exhaustive scan; when nothing
/// qualifies, reports the best candidate seen.
inline RefocusResult refocus_search(const QuadForm& form, int N, long long q_max) {
    if (q_max < 1) throw std::invalid_argument("refocus_search: q_max must be >= 1");
    if (N < 1) throw std::invalid_argument("refocus_search: N must be >= 1");
    const double lim = 1.0 / (static_cast<double>(N) * N);
    RefocusResult out;
    out.N = N;
    double best = 2.0;
    for (long long q = 1; q <= q_max; ++q) {
        const double qa = dist_to_int(static_cast<double>(q) * form.alpha());
        const double qb = dist_to_int(static_cast<double>(q) * form.beta());
        const double w = std::fmax(qa, qb);
        if (w < best) { best = w; out.q = q; out.worst = w; }
        if (w < lim) {
            out.q = q;
            out.worst = w;
            out.found = true;
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// exponent fitting

struct ExponentFit {
    double slope = 0.0;
    double r2 = 0.0;
};

/// Least-squares slope of log(value) against log(scale).
inline ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3) throw std::invalid_argument("exponent_fit: need at least 3 samples");
    std::vector<double> xs, ys;
    for (const auto& [scale, value] : samples) {
        if (!(scale > 0.0) || !(value > 0.0))
            throw std::invalid_argument("exponent_fit: scales and values must be positive");
        xs.push_back(std::log(scale));
        ys.push_back(std::log(value));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n; my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("exponent_fit: degenerate abscissae");
    ExponentFit out;
    out.slope = sxy / sxx;
    out.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return out;
}

// ---------------------------------------------------------------------------
// reference data profiles

enum class BumpKind { FullBump, Line, IndicatorBall };

/// Coefficient profiles used by the norm experiments: the smooth bump
/// (hat-chi profile in both frequency axes, L^2-normalized), the
/// one-dimensional line bump (support on {k2 = 0}), and the indicator of the
/// frequency ball (not normalized; ||f||_2^2 = #(Z^2 cap B(0,N))).
inline FourierData bump_data(int N, BumpKind kind, const CutoffProfile& chi = CutoffProfile{}) {
    if (N < 2) throw std::invalid_argument("bump_data: N must be >= 2");
    std::vector<LatticePoint> pts;
    std::vector<std::complex<double>> amps;
    const long long M = N - 1;
    std::vector<double> hat1(2 * M + 1);
    if (kind != BumpKind::IndicatorBall)
        for (long long k = -M; k <= M; ++k) hat1[k + M] = chi.hat(static_cast<double>(k) / N);
    for (long long k1 = -M; k1 <= M; ++k1)
        for (long long k2 = -M; k2 <= M; ++k2) {
            if (k1 * k1 + k2 * k2 >= static_cast<long long>(N) * N) continue;
            switch (kind) {
                case BumpKind::FullBump:
                    pts.push_back({k1, k2});
                    amps.push_back(hat1[k1 + M] * hat1[k2 + M]);
                    break;
                case BumpKind::Line:
                    if (k2 == 0) {
                        pts.push_back({k1, 0});
                        amps.push_back(hat1[k1 + M]);
                    }
                    break;
                case BumpKind::IndicatorBall:
                    pts.push_back({k1, k2});
                    amps.push_back(1.0);
                    break;
            }
        }
    FourierData f(N, std::move(pts), std::move(amps));
    if (kind != BumpKind::IndicatorBall) {
        const double nrm = f.l2_norm();
        if (!(nrm > 0.0)) throw std::logic_error("bump_data: zero profile");
        for (auto& a : f.amps()) a /= nrm;
        const double check = f.l2_norm();
        if (check < 0.9 || check > 1.1) throw std::logic_error("bump_data: normalization failed");
    }
    return f;
}

}  // namespace toruslab
