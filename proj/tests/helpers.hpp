#pragma once

#include <vector>

#include "wavedens/censoring.hpp"
#include "wavedens/rng.hpp"

namespace testutil {

/// Random censored sample with frequent ties: times live on a lattice of
/// half-integers, indicators are fair coin flips.
inline wavedens::CensoredSample random_tied_sample(wavedens::Xoshiro256& rng, int max_n,
                                                   bool allow_all_censored = true) {
    for (;;) {
        const int n = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(max_n));
        wavedens::CensoredSample s;
        for (int i = 0; i < n; ++i) {
            s.y.push_back(0.5 * static_cast<double>(1 + rng.next() % 20));
            s.delta.push_back(rng.next() % 2 ? 1 : 0);
        }
        if (!allow_all_censored) {
            bool any_event = false;
            for (int d : s.delta) any_event |= d == 1;
            if (!any_event) continue;
        }
        return s;
    }
}

/// Continuous-time censored sample (no ties almost surely).
inline wavedens::CensoredSample random_continuous_sample(wavedens::Xoshiro256& rng, int n,
                                                         double censor_rate = 1.0) {
    wavedens::CensoredSample s;
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform();
        const double t = rng.exponential(censor_rate);
        s.y.push_back(x < t ? x : t);
        s.delta.push_back(x <= t ? 1 : 0);
    }
    return s;
}

}  // namespace testutil
