#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "wavedens/censoring.hpp"
#include "wavedens/estimator.hpp"
#include "wavedens/periodized.hpp"
#include "wavedens/quadrature.hpp"
#include "wavedens/scaling.hpp"

namespace wavedens {

/// Exact fraction on int64; denominators in the small-sample product-limit
/// sums divide N! with N <= 6, far inside the representable range.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const { return {num * o.den, den * o.num}; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct KmCheckReport {
    double max_discrepancy = 0.0;
    std::int64_t cases = 0;
    bool pass = false;
};

/// Exhaustively re-derives the product-limit sums with exact rational
/// arithmetic for every indicator pattern up to max_n points (distinct
/// times) and compares the censoring module's curves, jump masses, and
/// IPCW identity term by term.
inline KmCheckReport exhaustive_km_check(int max_n, double tolerance = 1e-12) {
    KmCheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            CensoredSample s;
            for (int i = 0; i < n; ++i) {
                s.y.push_back(static_cast<double>(i + 1));
                s.delta.push_back((mask >> i) & 1u);
            }
            const RankedSample r = rank_sample(s);
            const KaplanMeierCurve fhat = km_event(r);
            const KaplanMeierCurve ghat = km_censoring(r);
            const std::vector<double> w = ipcw_weights(r);

            for (int target = 0; target < 2; ++target) {
                // Eq-29/30 pattern with d = delta (F) or 1 - delta (G).
                Rational survival{1};
                Rational cum{0};
                for (int i = 0; i < n; ++i) {
                    const int d = target == 0 ? r.delta_sorted[i] : 1 - r.delta_sorted[i];
                    const Rational at_risk{n - i};
                    Rational jump = d ? survival / at_risk : Rational{0};
                    cum = cum + jump;
                    if (d) survival = survival * (Rational{1} - Rational{1} / at_risk);
                    const KaplanMeierCurve& curve = target == 0 ? fhat : ghat;
                    report.max_discrepancy = std::max(
                        report.max_discrepancy, std::fabs(curve.jumps[i] - jump.to_double()));
                    report.max_discrepancy = std::max(
                        report.max_discrepancy, std::fabs(curve.cdf[i] - cum.to_double()));
                }
            }

            // IPCW identity: delta_(i) / (N (1 - G_hat(Y_(i)^-))) = dF_hat(Y_(i)).
            Rational prod{1};
            for (int i = 0; i < n; ++i) {
                Rational factor = Rational{n} / Rational{n - i} * prod;
                if (r.delta_sorted[i]) {
                    const Rational winv = factor / Rational{n};
                    report.max_discrepancy =
                        std::max(report.max_discrepancy,
                                 std::fabs(w[i] / n - winv.to_double()));
                    report.max_discrepancy = std::max(
                        report.max_discrepancy, std::fabs(fhat.jumps[i] - winv.to_double()));
                    prod = prod * Rational{n - i - 1} / Rational{n - i};
                } else {
                    report.max_discrepancy = std::max(report.max_discrepancy, std::fabs(w[i]));
                }
            }
            ++report.cases;
        }
    }
    report.pass = report.max_discrepancy <= tolerance;
    return report;
}

namespace detail {

inline std::int64_t next_pow2(std::int64_t v) {
    std::int64_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

// Basis value for quadrature use. Haar is discontinuous exactly on the
// dyadic abscissae; taking the mean of the one-sided limits there keeps
// the trapezoid rule second-order. Every other catalog filter is
// continuous, so the table value stands.
inline double quadrature_basis_value(const CascadeTable& table, int taps, double arg) {
    if (taps == 2 && (arg == 0.0 || arg == 1.0)) return 0.5;
    return table.at_dyadic(arg);
}

// One pass of the coefficient quadrature on 2^m panels; basis values come
// from the exact dyadic cascade table, an evaluation route independent of
// the Daubechies-Lagarias products used by the estimator.
inline std::vector<double> quadrature_coefficients(
    const std::function<double(double)>& pdf, const WaveletFilter& filter, int level,
    std::int64_t panels, QuadRule rule) {
    int m = 0;
    while ((std::int64_t{1} << m) < panels) ++m;
    const CascadeTable table(filter, std::max(0, m - level));
    const int L = filter.support_length();
    const double scale = periodized_level_scale(level);
    const std::int64_t period = std::int64_t{1} << level;
    std::vector<double> coeffs(static_cast<std::size_t>(period), 0.0);
    const double h = 1.0 / static_cast<double>(panels);
    for (std::int64_t i = 0; i <= panels; ++i) {
        const double x = static_cast<double>(i) * h;
        double qw = h;
        if (rule == QuadRule::trapezoid) {
            if (i == 0 || i == panels) qw *= 0.5;
        } else {
            qw *= (i == 0 || i == panels) ? 1.0 / 3.0 : (i % 2 ? 4.0 / 3.0 : 2.0 / 3.0);
        }
        const double fx = pdf(x) * qw;
        if (fx == 0.0) continue;
        const double u = x >= 1.0 ? x - 1.0 : x;
        const double base = std::ldexp(u, level);
        const auto kf = static_cast<std::int64_t>(std::floor(base));
        const double frac = base - static_cast<double>(kf);
        for (int o = 0; o <= L - 1; ++o) {
            const double v = quadrature_basis_value(table, L, frac + o);
            if (v == 0.0) continue;
            std::int64_t k = (kf - o) % period;
            if (k < 0) k += period;
            coeffs[k] += fx * scale * v;
        }
    }
    return coeffs;
}

}  // namespace detail

/// True projection coefficients c_{J,k} = int_0^1 f phi^per_{J,k} by
/// composite quadrature. Runs the rule twice (requested resolution and
/// doubled); throws NonConvergent if any coefficient moves by more than
/// 1e-6, and returns the finer result.
inline std::vector<double> true_coefficients(const std::function<double(double)>& pdf,
                                             const WaveletFilter& filter, int level,
                                             const QuadratureSpec& quad) {
    if (quad.points < 1024) throw ConfigError("quadrature spec needs at least 1024 points");
    const std::int64_t panels =
        detail::next_pow2(std::max(quad.points - 1, std::int64_t{4} << level));
    const std::vector<double> coarse =
        detail::quadrature_coefficients(pdf, filter, level, panels, quad.rule);
    std::vector<double> fine =
        detail::quadrature_coefficients(pdf, filter, level, panels * 2, quad.rule);
    for (std::size_t k = 0; k < fine.size(); ++k)
        if (std::fabs(fine[k] - coarse[k]) > 1e-6)
            throw NonConvergent("coefficient " + std::to_string(k) +
                                " moved by more than 1e-6 under grid doubling");
    return fine;
}

/// L2 distance between f and its level-J projection, by quadrature on the
/// same dyadic grid as true_coefficients.
inline double projection_error(const std::function<double(double)>& pdf,
                               const WaveletFilter& filter, int level,
                               const QuadratureSpec& quad) {
    const std::vector<double> coeffs = true_coefficients(pdf, filter, level, quad);
    const std::int64_t panels =
        2 * detail::next_pow2(std::max(quad.points - 1, std::int64_t{4} << level));
    int m = 0;
    while ((std::int64_t{1} << m) < panels) ++m;
    const CascadeTable table(filter, std::max(0, m - level));
    const int L = filter.support_length();
    const double scale = periodized_level_scale(level);
    const std::int64_t period = std::int64_t{1} << level;

    const auto residual_sq = [&](double x) {
        const double u = x >= 1.0 ? x - 1.0 : x;
        const double base = std::ldexp(u, level);
        const auto kf = static_cast<std::int64_t>(std::floor(base));
        const double frac = base - static_cast<double>(kf);
        double fh = 0.0;
        for (int o = 0; o <= L - 1; ++o) {
            const double v = detail::quadrature_basis_value(table, L, frac + o);
            if (v == 0.0) continue;
            std::int64_t k = (kf - o) % period;
            if (k < 0) k += period;
            fh += coeffs[k] * scale * v;
        }
        const double diff = pdf(x) - fh;
        return diff * diff;
    };
    QuadratureSpec eval_spec{panels + 1, quad.rule};
    return std::sqrt(integrate_unit(residual_sq, eval_spec));
}

}  // namespace wavedens
