#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wavedens/filters.hpp"

namespace wavedens {

/// Default number of dyadic refinement steps (matrix products) used when
/// evaluating a scaling function at an arbitrary point. The absolute error
/// decays like 2^(-depth*alpha) with alpha the filter's Holder exponent:
/// at depth 40 the smooth filters sit at machine precision while the
/// roughest one (daubechies2, alpha ~ 0.55) reaches ~2e-7; raise the depth
/// to ~64 when a rough filter must hit 1e-8.
inline constexpr int kDefaultDepth = 40;

/// phi at the integer abscissae 0..L-1. These are the entries of the
/// eigenvector (eigenvalue 1) of the refinement matrix M[i][j] = sqrt(2)
/// h[2i-j], normalized by the partition of unity sum phi(k) = 1. Interior
/// solve via power iteration (the remaining spectrum is {1/2, 1/4, ...}).
inline std::vector<double> scaling_integer_values(const WaveletFilter& filter) {
    const int L = filter.support_length();
    const double s2 = std::sqrt(2.0);
    std::vector<double> vals(static_cast<std::size_t>(L), 0.0);
    if (L == 2) {
        vals[0] = 1.0;  // Haar: phi = 1 on [0,1), right-continuous convention
        return vals;
    }
    const int n = L - 2;  // interior points 1..L-2; phi(0) = phi(L-1) = 0
    std::vector<double> v(n, 1.0 / n), next(n, 0.0);
    for (int iter = 0; iter < 200; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                const int idx = 2 * (i + 1) - (j + 1);
                if (idx >= 0 && idx < L) acc += s2 * filter.h[idx] * v[j];
            }
            next[i] = acc;
        }
        double sum = 0.0;
        for (double x : next) sum += x;
        for (int i = 0; i < n; ++i) v[i] = next[i] / sum;
    }
    for (int i = 0; i < n; ++i) vals[i + 1] = v[i];
    return vals;
}

/// Daubechies-Lagarias evaluator for one filter. Builds the two (L-1)x(L-1)
/// transition matrices
///
///     T_d[i][j] = sqrt(2) * h[2i - j + d],   d in {0,1},
///
/// once; phi(x) is then recovered from the product T_{d1} T_{d2} ... T_{dn}
/// driven by the binary digits d1 d2 ... of frac(x). Every column of the
/// product converges to the vector (phi(t), phi(t+1), ..., phi(t+L-2)).
class ScalingEvaluator {
public:
    explicit ScalingEvaluator(const WaveletFilter& filter, int depth = kDefaultDepth)
        : filter_(filter), dim_(filter.support_length() - 1),
          depth_(depth < 1 ? 1 : (depth > kMaxDepth ? kMaxDepth : depth)) {
        const int L = filter.support_length();
        const double s2 = std::sqrt(2.0);
        t_[0].assign(static_cast<std::size_t>(dim_) * dim_, 0.0);
        t_[1].assign(static_cast<std::size_t>(dim_) * dim_, 0.0);
        for (int d = 0; d < 2; ++d)
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j) {
                    const int idx = 2 * i - j + d;
                    if (idx >= 0 && idx < L) t_[d][i * dim_ + j] = s2 * filter.h[idx];
                }
    }

    const WaveletFilter& filter() const { return filter_; }
    int depth() const { return depth_; }

    /// phi(x); exactly 0 outside the support [0, L-1].
    double operator()(double x) const {
        const int L = filter_.support_length();
        if (!(x >= 0.0) || x >= static_cast<double>(L - 1)) {
            // x == L-1 falls here: phi is right-continuous, phi(L-1) = 0.
            return 0.0;
        }
        const double fl = std::floor(x);
        const int cell = static_cast<int>(fl);
        double t = x - fl;

        std::array<std::uint8_t, kMaxDepth> digits{};
        for (int s = 0; s < depth_; ++s) {
            t *= 2.0;
            if (t >= 1.0) {
                digits[s] = 1;
                t -= 1.0;
            }
        }

        // v = T_{d1} (T_{d2} (... (T_{dn} u))), u = column average seed.
        std::array<double, kMaxDim> v{}, w{};
        for (int i = 0; i < dim_; ++i) v[i] = 1.0 / dim_;
        for (int s = depth_ - 1; s >= 0; --s) {
            const double* T = t_[digits[s]].data();
            for (int i = 0; i < dim_; ++i) {
                double acc = 0.0;
                for (int j = 0; j < dim_; ++j) acc += T[i * dim_ + j] * v[j];
                w[i] = acc;
            }
            for (int i = 0; i < dim_; ++i) v[i] = w[i];
        }
        return v[cell];
    }

private:
    static constexpr int kMaxDepth = 256;
    static constexpr int kMaxDim = 32;  // catalog tops out at L = 20

    WaveletFilter filter_;
    int dim_;
    int depth_;
    std::vector<double> t_[2];
};

/// One-shot evaluation of phi(x) via Daubechies-Lagarias.
inline double eval_scaling(const WaveletFilter& filter, double x, int depth = kDefaultDepth) {
    return ScalingEvaluator(filter, depth)(x);
}

/// phi tabulated on the dyadic grid m / 2^levels over [0, L-1], built by
/// cascade refinement from the integer values. Each cascade step applies the
/// two-scale relation, which is exact on dyadic points, so the table is an
/// evaluation path independent of the Daubechies-Lagarias products.
class CascadeTable {
public:
    CascadeTable(const WaveletFilter& filter, int levels)
        : support_(filter.support_length() - 1), levels_(levels) {
        const int L = filter.support_length();
        const double s2 = std::sqrt(2.0);
        std::vector<double> cur = scaling_integer_values(filter);
        for (int j = 1; j <= levels; ++j) {
            const std::int64_t prev_n = (static_cast<std::int64_t>(support_) << (j - 1));
            const std::int64_t n = (static_cast<std::int64_t>(support_) << j);
            std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
            for (std::int64_t m = 0; m <= n; ++m) {
                // phi(m/2^j) = sqrt(2) sum_r h[r] phi(m/2^(j-1) - r)
                double acc = 0.0;
                for (int r = 0; r < L; ++r) {
                    const std::int64_t idx = m - (static_cast<std::int64_t>(r) << (j - 1));
                    if (idx >= 0 && idx <= prev_n) acc += filter.h[r] * cur[idx];
                }
                next[m] = s2 * acc;
            }
            cur = std::move(next);
        }
        values_ = std::move(cur);
    }

    int levels() const { return levels_; }

    /// phi(x) for x on the table's dyadic grid; 0 outside [0, L-1).
    double at_dyadic(double x) const {
        const double scaled = std::ldexp(x, levels_);
        const auto idx = static_cast<std::int64_t>(std::llround(scaled));
        if (idx < 0 || idx >= static_cast<std::int64_t>(values_.size()) - 1) return 0.0;
        return values_[idx];
    }

    const std::vector<double>& values() const { return values_; }

private:
    int support_;
    int levels_;
    std::vector<double> values_;
};

}  // namespace wavedens
