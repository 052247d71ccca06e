#include <cstdio>
#include <cmath>
#include <vector>
#include "wavedens/periodized.hpp"
using namespace wavedens;

// max |Gram - I| via trapezoid on 2^{J+extra} panels using the cascade table
double gram_err(const WaveletFilter& f, int level, int extra) {
    const int L = f.support_length();
    const std::int64_t period = 1ll << level;
    const std::int64_t n = 1ll << (level + extra);
    int m = level + extra;
    const CascadeTable table(f, m - level);
    const double scale = periodized_level_scale(level);
    std::vector<double> gram(period * period, 0.0);
    const double h = 1.0 / (double)n;
    std::vector<std::int64_t> ks; std::vector<double> vs;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double x = i * h;
        const double qw = (i == 0 || i == n) ? 0.5 * h : h;
        const double u = x >= 1.0 ? x - 1.0 : x;
        const double base = std::ldexp(u, level);
        const auto kf = (std::int64_t)std::floor(base);
        const double frac = base - kf;
        ks.clear(); vs.clear();
        for (int o = 0; o <= L - 1; ++o) {
            double v = table.at_dyadic(frac + o);
            if (L == 2 && (frac + o == 0.0 || frac + o == 1.0)) v = 0.5;
            if (v == 0.0) continue;
            std::int64_t k = (kf - o) % period; if (k < 0) k += period;
            ks.push_back(k); vs.push_back(v * scale);
        }
        for (size_t a = 0; a < ks.size(); ++a)
            for (size_t b = 0; b < ks.size(); ++b)
                gram[ks[a] * period + ks[b]] += qw * vs[a] * vs[b];
    }
    double worst = 0.0;
    for (std::int64_t a = 0; a < period; ++a)
        for (std::int64_t b = 0; b < period; ++b)
            worst = std::max(worst, std::fabs(gram[a * period + b] - (a == b ? 1.0 : 0.0)));
    return worst;
}

int main() {
    for (const char* name : {"haar", "daubechies2", "daubechies3", "daubechies10", "symmlet4", "symmlet5", "coiflet1", "coiflet3"}) {
        const WaveletFilter f = load_filter(name);
        std::printf("%-13s", name);
        for (int extra : {12, 14, 16}) std::printf("  J4+%d: %.3e", extra, gram_err(f, 4, extra));
        std::printf("  J6+12: %.3e\n", gram_err(f, 6, 12));
    }
    return 0;
}
