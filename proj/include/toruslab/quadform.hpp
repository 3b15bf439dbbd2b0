#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "toruslab/rng.hpp"

// Torus geometry. The symmetric coefficient matrix is
//
//     [ 1     beta ]
//     [ beta  alpha ]
//
// with the top-left entry normalized to 1, so a form is the pair (alpha,beta).
// Membership in the generic set E requires both eigenvalues of the matrix to
// exceed 1 in absolute value. Since 1 is a Rayleigh quotient of the matrix,
// the smaller eigenvalue is always <= 1; membership therefore forces it below
// -1, equivalently alpha < beta^2/2 - 1 (the slice has measure 20/3 of the
// [-2,2]^2 square).

namespace toruslab {

struct LatticePoint {
    long long k1 = 0;
    long long k2 = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

class QuadForm {
  public:
    QuadForm(double alpha, double beta, bool allow_out_of_range = false)
        : alpha_(alpha), beta_(beta) {
        if (!allow_out_of_range && (std::fabs(alpha) > 2.0 || std::fabs(beta) > 2.0))
            throw std::invalid_argument("QuadForm: coefficients must lie in [-2,2]");
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    std::uint64_t seed() const { return seed_; }

    /// Eigenvalues of [[1,beta],[beta,alpha]], ascending.
    std::pair<double, double> eigenvalues() const {
        const double tr = 1.0 + alpha_;
        const double disc = std::sqrt((1.0 - alpha_) * (1.0 - alpha_) + 4.0 * beta_ * beta_);
        return {0.5 * (tr - disc), 0.5 * (tr + disc)};
    }

    bool in_E() const {
        auto [l1, l2] = eigenvalues();
        return std::fabs(l1) > 1.0 && std::fabs(l2) > 1.0 &&
               std::fabs(alpha_) <= 2.0 && std::fabs(beta_) <= 2.0;
    }

    /// max(1,|alpha|,|beta|); used in time-step preconditions.
    double norm() const { return std::fmax(1.0, std::fmax(std::fabs(alpha_), std::fabs(beta_))); }

    std::string to_json() const;

    static QuadForm sample_generic(std::uint64_t seed);

  private:
    friend QuadForm sample_generic_impl(std::uint64_t);
    double alpha_;
    double beta_;
    std::uint64_t seed_ = 0;
};

/// Q(k) = k1^2 + 2 beta k1 k2 + alpha k2^2.
inline double eval_q(const QuadForm& form, const LatticePoint& k) {
    const double k1 = static_cast<double>(k.k1);
    const double k2 = static_cast<double>(k.k2);
    return k1 * k1 + 2.0 * form.beta() * k1 * k2 + form.alpha() * k2 * k2;
}

/// (L1(r), L2(r)) = (r1 + beta r2, beta r1 + alpha r2). Satisfies
/// r1 L1 + r2 L2 = Q(r).
inline std::pair<double, double> linear_forms(const QuadForm& form, const LatticePoint& r) {
    const double r1 = static_cast<double>(r.k1);
    const double r2 = static_cast<double>(r.k2);
    return {r1 + form.beta() * r2, form.beta() * r1 + form.alpha() * r2};
}

inline QuadForm sample_generic_impl(std::uint64_t seed) {
    Rng rng(seed);
    // Rejection sampling from [-2,2]^2; the accepted slice has measure
    // (20/3)/16 ~ 0.417, so the cap is unreachable for a working generator.
    for (int tries = 0; tries < 10000; ++tries) {
        const double alpha = rng.uniform(-2.0, 2.0);
        const double beta = rng.uniform(-2.0, 2.0);
        QuadForm form(alpha, beta);
        if (form.in_E()) {
            form.seed_ = seed;
            return form;
        }
    }
    throw std::runtime_error("sample_generic: rejection cap hit; generator is broken");
}

inline QuadForm QuadForm::sample_generic(std::uint64_t seed) { return sample_generic_impl(seed); }

inline std::string QuadForm::to_json() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "{\"alpha\":%.17g,\"beta\":%.17g,\"seed\":%llu}", alpha_, beta_,
                  static_cast<unsigned long long>(seed_));
    return buf;
}

struct ComboCount {
    long long count = 0;   // triples strictly inside the window
    long long guard = 0;   // endpoint triples within one ulp of the window edge
};

/// Count integer triples (A,B,C), |A|,|B|,|C| <= R, with |A + B alpha + C beta
/// - tau| < delta. For each (B,C) the admissible A form an interval, so the
/// count is O(R^2). Endpoints within a 1-ulp band of the window edge are
/// tallied separately in `guard` instead of silently rounding either way.
inline ComboCount count_small_combos_detail(const QuadForm& form, long long R, double tau, double delta) {
    if (R < 0) throw std::invalid_argument("count_small_combos: R must be >= 0");
    if (!(delta > 0)) throw std::invalid_argument("count_small_combos: delta must be > 0");
    ComboCount out;
    const double eps = 4.0 * std::max(1.0, std::fabs(tau) + 5.0 * static_cast<double>(R)) * 0x1.0p-52;
    for (long long B = -R; B <= R; ++B) {
        const double bterm = static_cast<double>(B) * form.alpha();
        for (long long C = -R; C <= R; ++C) {
            const double center = tau - bterm - static_cast<double>(C) * form.beta();
            // strict window (center - delta, center + delta)
            long long lo = static_cast<long long>(std::floor(center - delta)) + 1;
            long long hi = static_cast<long long>(std::ceil(center + delta)) - 1;
            if (lo < -R) lo = -R;
            if (hi > R) hi = R;
            if (hi >= lo) out.count += hi - lo + 1;
            // ulp guard band at both edges
            for (double edge : {center - delta, center + delta}) {
                const double r = std::nearbyint(edge);
                if (std::fabs(edge - r) <= eps && std::fabs(r) <= static_cast<double>(R)) ++out.guard;
            }
        }
    }
    return out;
}

inline long long count_small_combos(const QuadForm& form, long long R, double tau, double delta) {
    return count_small_combos_detail(form, R, tau, delta).count;
}

}  // namespace toruslab
