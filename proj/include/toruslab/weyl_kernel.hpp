#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toruslab/cutoff.hpp"
#include "toruslab/fft.hpp"
#include "toruslab/parallel.hpp"
#include "toruslab/quadform.hpp"

// The regularized fundamental solution
//
//   K_N(t,x) = sum_{n in Z^2} chi(n1/N) chi(n2/N) e^{2 pi i [x.n + t Q(n)]},
//
// its supremum over the torus, the Weyl-differencing majorant
//
//   sum_{|r_i|<=2N} prod_j min(N, 1/||2 t L_j(r)||),
//
// and the time-averaged fourth power of the supremum.

namespace toruslab {

namespace detail {

inline double frac_unit(double x) { return x - std::floor(x); }

inline std::complex<double> unit_phase(double turns) {
    const double ang = 2.0 * M_PI * frac_unit(turns);
    return {std::cos(ang), std::sin(ang)};
}

/// Per-(form,N,t) phase tables: the kernel coefficient at n factors as
///   c(n1,n2) = cx1[n1] * cx2[n2] * w[n1*n2]
/// with cx1[n] = chi(n/N) e^{2 pi i t n^2}, cx2[n] = chi(n/N) e^{2 pi i t
/// alpha n^2} and w[m] = e^{2 pi i t 2 beta m}.
struct KernelTables {
    int N;
    std::vector<std::complex<double>> cx1, cx2;  // index n + (N-1), n in [-(N-1), N-1]
    std::vector<std::complex<double>> w;         // index m + (N-1)^2

    KernelTables(const QuadForm& form, const CutoffProfile& chi, int N_, double t) : N(N_) {
        const int M = N - 1;
        cx1.resize(2 * M + 1);
        cx2.resize(2 * M + 1);
        for (int n = -M; n <= M; ++n) {
            const double c = chi(static_cast<double>(n) / N);
            const double nn = static_cast<double>(n) * n;
            cx1[n + M] = c * unit_phase(t * nn);
            cx2[n + M] = c * unit_phase(t * form.alpha() * nn);
        }
        const long long mm = static_cast<long long>(M) * M;
        w.resize(2 * mm + 1);
        const double theta = t * 2.0 * form.beta();
        for (long long m = -mm; m <= mm; ++m)
            w[m + mm] = unit_phase(theta * static_cast<double>(m));
    }

    std::complex<double> coeff(int n1, int n2) const {
        const int M = N - 1;
        const long long mm = static_cast<long long>(M) * M;
        return cx1[n1 + M] * cx2[n2 + M] * w[static_cast<long long>(n1) * n2 + mm];
    }

    /// K(t,x) by direct summation over the support, O((2N)^2).
    std::complex<double> value_at(double x1, double x2) const {
        const int M = N - 1;
        const long long mm = static_cast<long long>(M) * M;
        std::vector<std::complex<double>> ex2(2 * M + 1);
        for (int n2 = -M; n2 <= M; ++n2) ex2[n2 + M] = unit_phase(x2 * n2);
        std::complex<double> total{0.0, 0.0};
        for (int n1 = -M; n1 <= M; ++n1) {
            std::complex<double> row{0.0, 0.0};
            for (int n2 = -M; n2 <= M; ++n2)
                row += cx2[n2 + M] * w[static_cast<long long>(n1) * n2 + mm] * ex2[n2 + M];
            total += cx1[n1 + M] * unit_phase(x1 * n1) * row;
        }
        return total;
    }
};

inline std::vector<std::complex<double>>& kernel_scratch() {
    thread_local std::vector<std::complex<double>> buf;
    return buf;
}

/// Fill a G x G buffer with the kernel coefficients (rows indexed by n1 mod G)
/// and transform it so that buf[x2*G + x1] = K(t, x1/G, x2/G).
inline void evaluate_grid(const KernelTables& tables, std::size_t G,
                          std::vector<std::complex<double>>& buf) {
    buf.assign(G * G, std::complex<double>{0.0, 0.0});
    const int M = tables.N - 1;
    auto plan = FftPlan::get(G);
    for (int n1 = -M; n1 <= M; ++n1) {
        const std::size_t r = static_cast<std::size_t>((n1 % static_cast<int>(G) + static_cast<int>(G)) %
                                                       static_cast<int>(G));
        std::complex<double>* row = buf.data() + r * G;
        for (int n2 = -M; n2 <= M; ++n2) {
            const std::size_t c = static_cast<std::size_t>((n2 % static_cast<int>(G) + static_cast<int>(G)) %
                                                           static_cast<int>(G));
            row[c] = tables.coeff(n1, n2);
        }
        plan->run(row);
    }
    transpose_square(buf.data(), G);
    for (std::size_t r = 0; r < G; ++r) plan->run(buf.data() + r * G);
}

}  // namespace detail

/// Values of K_N(t, .) on the uniform G x G grid, G a power of two >= 2N;
/// transposed layout: out[x2*G + x1] = K(t, x1/G, x2/G).
inline std::vector<std::complex<double>> kernel_grid(const QuadForm& form, const CutoffProfile& chi,
                                                     int N, double t, std::size_t G) {
    if (N < 1) throw std::invalid_argument("kernel_grid: N must be >= 1");
    if (G < static_cast<std::size_t>(2 * N)) throw std::invalid_argument("kernel_grid: grid too coarse");
    detail::KernelTables tables(form, chi, N, t);
    std::vector<std::complex<double>> buf;
    detail::evaluate_grid(tables, G, buf);
    return buf;
}

/// Direct evaluation of K_N(t,x): sum over |n_i| < N of
/// chi(n1/N) chi(n2/N) e^{2 pi i [x.n + t Q(n)]}.
inline std::complex<double> kernel_direct(const QuadForm& form, const CutoffProfile& chi, int N,
                                          double t, double x1, double x2) {
    if (N < 1) throw std::invalid_argument("kernel_direct: N must be >= 1");
    detail::KernelTables tables(form, chi, N, t);
    return tables.value_at(x1, x2);
}

struct KernelSample {
    int N = 0;
    double t = 0.0;
    double sup_abs = 0.0;
    int grid_size = 0;
    int refine_depth = 0;
    double arg_x1 = 0.0;
    double arg_x2 = 0.0;
};

/// Estimate sup_x |K_N(t,x)| from an (oversample*2N)^2 evaluation grid
/// (rounded up to a power of two) followed by local refinement around the
/// argmax cell. The result is a certified lower bound on the true supremum;
/// on a grid of >= 8*(2N) points per axis it lies within a factor 1.1 of it
/// (Bernstein growth bound for trigonometric polynomials of degree < 2N).
inline KernelSample sup_over_x(const QuadForm& form, const CutoffProfile& chi, int N, double t,
                               int oversample, int refine_depth = 3) {
    if (N < 1) throw std::invalid_argument("sup_over_x: N must be >= 1");
    if (oversample < 4) throw std::invalid_argument("sup_over_x: oversample must be >= 4");
    const std::size_t G = next_pow2(static_cast<std::size_t>(oversample) * 2 * N);
    if (G > (std::size_t{1} << 16)) throw std::invalid_argument("sup_over_x: grid too large");
    detail::KernelTables tables(form, chi, N, t);

    auto& buf = detail::kernel_scratch();
    detail::evaluate_grid(tables, G, buf);
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t r = 0; r < G; ++r) {
        const std::complex<double>* row = buf.data() + r * G;
        for (std::size_t c = 0; c < G; ++c) {
            const double a = std::norm(row[c]);
            if (a > best) { best = a; bi = r; bj = c; }
        }
    }
    double sup = std::sqrt(best);
    double x1 = static_cast<double>(bj) / G;
    double x2 = static_cast<double>(bi) / G;
    double w = 1.0 / static_cast<double>(G);
    for (int round = 0; round < refine_depth; ++round) {
        double rx1 = x1, rx2 = x2;
        for (int di = -2; di <= 2; ++di)
            for (int dj = -2; dj <= 2; ++dj) {
                if (di == 0 && dj == 0) continue;
                const double y1 = x1 + dj * w / 2.0;
                const double y2 = x2 + di * w / 2.0;
                const double a = std::abs(tables.value_at(y1, y2));
                if (a > sup) { sup = a; rx1 = y1; rx2 = y2; }
            }
        x1 = rx1; x2 = rx2;
        w /= 4.0;
    }
    KernelSample out;
    out.N = N;
    out.t = t;
    out.sup_abs = sup;
    out.grid_size = static_cast<int>(G);
    out.refine_depth = refine_depth;
    out.arg_x1 = x1;
    out.arg_x2 = x2;
    return out;
}

/// Distance to the nearest integer, with values within 1e-12 of a half-integer
/// snapped to exactly 1/2 so tie-breaking is deterministic.
inline double dist_to_int(double x) {
    double d = std::fabs(x - std::nearbyint(x));
    if (std::fabs(d - 0.5) < 1e-12) d = 0.5;
    return d;
}

/// The Weyl-differencing majorant
///   sum_{r1=-2N}^{2N} sum_{r2=-2N}^{2N} prod_{j=1,2} min(N, 1/||2 t L_j(r)||).
inline double weyl_rhs(const QuadForm& form, int N, double t) {
    if (N < 1) throw std::invalid_argument("weyl_rhs: N must be >= 1");
    const double Nd = static_cast<double>(N);
    std::vector<double> rowsums;
    rowsums.reserve(4 * N + 1);
    for (int r1 = -2 * N; r1 <= 2 * N; ++r1) {
        double row = 0.0;
        for (int r2 = -2 * N; r2 <= 2 * N; ++r2) {
            const double L1 = r1 + form.beta() * r2;
            const double L2 = form.beta() * r1 + form.alpha() * r2;
            const double d1 = dist_to_int(2.0 * t * L1);
            const double d2 = dist_to_int(2.0 * t * L2);
            const double f1 = d1 > 0.0 ? std::fmin(Nd, 1.0 / d1) : Nd;
            const double f2 = d2 > 0.0 ? std::fmin(Nd, 1.0 / d2) : Nd;
            row += f1 * f2;
        }
        rowsums.push_back(row);
    }
    return pairwise_sum(rowsums);
}

/// sup_x |K_N(t,x)| / min(N^2, 1/t) for 0 < t <= 1/N.
inline double dispersive_ratio(const QuadForm& form, const CutoffProfile& chi, int N, double t) {
    if (!(t > 0.0) || t > 1.0 / static_cast<double>(N))
        throw std::invalid_argument("dispersive_ratio: t must lie in (0, 1/N]");
    const double sup = sup_over_x(form, chi, N, t, 8, 2).sup_abs;
    const double bound = std::fmin(static_cast<double>(N) * N, 1.0 / t);
    return sup / bound;
}

struct L4Result {
    double value = 0.0;
    double step = 0.0;
    long long samples = 0;
};

/// Composite-midpoint quadrature of sup_x |K_N(t,x)|^4 over [1,T].
/// Requires dt <= 1/(8 max(1,|alpha|,|beta|) N^2), the step that resolves the
/// fastest coefficient phase.
inline L4Result l4_time_integral_detail(const QuadForm& form, const CutoffProfile& chi, int N,
                                        double T, double dt, int oversample, int refine_depth = 0) {
    if (!(T > 1.0)) throw std::invalid_argument("l4_time_integral: T must be > 1");
    const double dt_max = 1.0 / (8.0 * form.norm() * static_cast<double>(N) * N);
    if (!(dt > 0.0) || dt > dt_max * (1.0 + 1e-12))
        throw std::invalid_argument("l4_time_integral: dt exceeds 1/(8 max(1,|a|,|b|) N^2)");
    const long long M = static_cast<long long>(std::ceil((T - 1.0) / dt));
    const double h = (T - 1.0) / static_cast<double>(M);
    std::vector<double> vals(static_cast<std::size_t>(M));
    parallel_for(static_cast<std::size_t>(M), [&](std::size_t j) {
        const double t = 1.0 + (static_cast<double>(j) + 0.5) * h;
        const double s = sup_over_x(form, chi, N, t, oversample, refine_depth).sup_abs;
        const double s2 = s * s;
        vals[j] = s2 * s2;
    });
    L4Result out;
    out.value = pairwise_sum(vals) * h;
    out.step = h;
    out.samples = M;
    return out;
}

inline double l4_time_integral(const QuadForm& form, const CutoffProfile& chi, int N, double T,
                               double dt, int oversample) {
    return l4_time_integral_detail(form, chi, N, T, dt, oversample).value;
}

struct SweepRow {
    int N = 0;
    double t = 0.0;
    double sup_abs = 0.0;
    double weyl_rhs = 0.0;
    double ratio_disp = 0.0;  // 0 when t is outside the dispersive window
    std::uint64_t seed = 0;
};

struct SweepTable {
    QuadForm form;
    std::uint64_t seed = 0;
    std::vector<SweepRow> rows;  // strictly increasing t

    std::string to_csv() const {
        std::string out = "N,t,sup_abs,weyl_rhs,ratio_disp,seed\n";
        char line[256];
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%llu\n", r.N, r.t, r.sup_abs,
                          r.weyl_rhs, r.ratio_disp, static_cast<unsigned long long>(r.seed));
            out += line;
        }
        return out;
    }
};

}  // namespace toruslab
