#pragma once

#include <cmath>
#include <stdexcept>

#include "toruslab/chi_table.hpp"

namespace toruslab {

// Smooth even cutoff profile chi: equal to 1 on [-1/2,1/2], 0 outside (-1,1).
// Evaluation goes through the frozen 4096-entry table (chi_table.hpp) with
// Catmull-Rom interpolation on the transition region, so coefficient sums are
// reproducible bit for bit. The closed-form rule that generated the table is
// kept alongside for verification.
class CutoffProfile {
  public:
    double operator()(double x) const {
        x = std::fabs(x);
        if (x <= 0.5) return 1.0;
        if (x >= 1.0) return 0.0;
        const int n = detail::kChiTableSize;
        const double pos = x * (n - 1);
        int i = static_cast<int>(pos);
        if (i >= n - 1) i = n - 2;
        const double f = pos - i;
        const double p0 = detail::kChiTable[i > 0 ? i - 1 : 0];
        const double p1 = detail::kChiTable[i];
        const double p2 = detail::kChiTable[i + 1];
        const double p3 = detail::kChiTable[i + 2 < n ? i + 2 : n - 1];
        // Catmull-Rom cubic through p1,p2.
        const double a0 = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
        const double a1 = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
        const double a2 = -0.5 * p0 + 0.5 * p2;
        double v = ((a0 * f + a1) * f + a2) * f + p1;
        if (v < 0.0) v = 0.0;
        if (v > 1.0) v = 1.0;
        return v;
    }

    /// Closed-form rule behind the table: exp(-1/s) glue on the transition.
    static double closed_form(double x) {
        x = std::fabs(x);
        if (x <= 0.5) return 1.0;
        if (x >= 1.0) return 0.0;
        const double s = 2.0 * (x - 0.5);
        const double h1 = std::exp(-1.0 / (1.0 - s));
        const double h0 = std::exp(-1.0 / s);
        return h1 / (h0 + h1);
    }

    /// Fourier transform hat{chi}(xi) = int chi(s) e^{-2 pi i s xi} ds, real and
    /// even; computed from the frozen table with the composite Simpson rule.
    double hat(double xi) const {
        const int n = detail::kChiTableSize;  // samples of chi on [0,1]
        const double h = 1.0 / (n - 1);
        // 2 * int_0^1 chi(s) cos(2 pi s xi) ds  (chi is even)
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double s = i * h;
            double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += w * detail::kChiTable[i] * std::cos(2.0 * M_PI * s * xi);
        }
        return 2.0 * acc * h / 3.0;
    }
};

}  // namespace toruslab
