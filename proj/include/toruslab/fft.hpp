#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

// Radix-2 complex FFT with the e^{+2 pi i jk/n} convention, i.e. an
// unnormalized inverse DFT: out[j] = sum_k in[k] e^{+2 pi i jk/n}. That is the
// direction needed to evaluate a trigonometric polynomial from its
// coefficients on a uniform grid. Plans (bit-reversal and twiddle tables) are
// cached per size and are safe to share across threads.

namespace toruslab {

class FftPlan {
  public:
    explicit FftPlan(std::size_t n) : n_(n) {
        if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("FftPlan: size must be a power of two");
        int levels = 0;
        while ((std::size_t{1} << levels) < n) ++levels;
        rev_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0, v = i;
            for (int l = 0; l < levels; ++l) { r = (r << 1) | (v & 1); v >>= 1; }
            rev_[i] = r;
        }
        tw_.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
            tw_[k] = {std::cos(ang), std::sin(ang)};
        }
    }

    std::size_t size() const { return n_; }

    /// In-place transform: a[j] <- sum_k a[k] e^{+2 pi i jk/n}.
    void run(std::complex<double>* a) const {
        const std::size_t n = n_;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = rev_[i];
            if (i < j) std::swap(a[i], a[j]);
        }
        for (std::size_t len = 2; len <= n; len <<= 1) {
            const std::size_t half = len >> 1;
            const std::size_t step = n / len;
            for (std::size_t i = 0; i < n; i += len) {
                const std::complex<double>* w = tw_.data();
                for (std::size_t k = 0; k < half; ++k, w += step) {
                    const std::complex<double> u = a[i + k];
                    const std::complex<double> v = a[i + k + half] * (*w);
                    a[i + k] = u + v;
                    a[i + k + half] = u - v;
                }
            }
        }
    }

    static std::shared_ptr<const FftPlan> get(std::size_t n) {
        static std::mutex mu;
        static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        auto plan = std::make_shared<const FftPlan>(n);
        cache.emplace(n, plan);
        return plan;
    }

  private:
    std::size_t n_;
    std::vector<std::size_t> rev_;
    std::vector<std::complex<double>> tw_;
};

inline std::size_t next_pow2(std::size_t n) {
    std::size_t g = 1;
    while (g < n) g <<= 1;
    return g;
}

/// In-place transpose of a square row-major array.
inline void transpose_square(std::complex<double>* a, std::size_t g) {
    constexpr std::size_t B = 32;  // block for cache friendliness
    for (std::size_t bi = 0; bi < g; bi += B)
        for (std::size_t bj = bi; bj < g; bj += B)
            for (std::size_t i = bi; i < bi + B && i < g; ++i) {
                const std::size_t j0 = (bi == bj) ? i + 1 : bj;
                for (std::size_t j = j0; j < bj + B && j < g; ++j)
                    std::swap(a[i * g + j], a[j * g + i]);
            }
}

}  // namespace toruslab
