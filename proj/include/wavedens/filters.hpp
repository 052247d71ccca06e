#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wavedens/errors.hpp"

namespace wavedens {

/// Compactly supported orthonormal scaling filter. `h` holds the low-pass
/// coefficients of the two-scale relation
///
///     phi(x) = sqrt(2) * sum_r h[r] * phi(2x - r),
///
/// so phi is supported on [0, L-1] with L = h.size().
struct WaveletFilter {
    std::string name;
    std::vector<double> h;

    int support_length() const { return static_cast<int>(h.size()); }
};

namespace detail {

struct FilterRow {
    const char* name;
    std::vector<double> h;
};

// Canonical coefficient tables: extremal-phase Daubechies, least-asymmetric
// Symmlets, Coiflets. Values were produced by 60-digit spectral
// factorization / Newton refinement and rounded once to double; they are
// re-validated against the QMF identities every time a filter is loaded.
inline const std::vector<FilterRow>& filter_table() {
    static const std::vector<FilterRow> table = {
        {"haar", {0.70710678118654757, 0.70710678118654757}},
        {"daubechies2", {0.48296291314453416, 0.83651630373780794, 0.22414386804201339, -0.12940952255126037}},
        {"daubechies3", {0.33267055295008263, 0.80689150931109255, 0.45987750211849154, -0.13501102001025458, -0.085441273882026658, 0.035226291885709533}},
        {"daubechies4", {0.23037781330889651, 0.71484657055291567, 0.63088076792985892, -0.027983769416859854, -0.18703481171909309, 0.030841381835560764, 0.032883011666885197, -0.010597401785069032}},
        {"daubechies5", {0.16010239797419293, 0.60382926979718965, 0.72430852843777294, 0.13842814590132074, -0.24229488706638203, -0.032244869584638375, 0.077571493840045719, -0.0062414902127982744, -0.012580751999081999, 0.0033357252854737712}},
        {"daubechies6", {0.11154074335010947, 0.49462389039845306, 0.75113390802109536, 0.31525035170919763, -0.22626469396543983, -0.12976686756726194, 0.097501605587323043, 0.027522865530305727, -0.03158203931748603, 0.00055384220116149613, 0.0047772575109455108, -0.0010773010853084796}},
        {"daubechies7", {0.077852054085009184, 0.39653931948191729, 0.72913209084623509, 0.46978228740519312, -0.14390600392856498, -0.22403618499387498, 0.071309219266830259, 0.080612609151083078, -0.038029936935014413, -0.016574541630666881, 0.01255099855609984, 0.00042957797292136651, -0.0018016407040474908, 0.00035371379997452024}},
        {"daubechies8", {0.054415842243104008, 0.31287159091429995, 0.67563073629728976, 0.58535468365420673, -0.015829105256349306, -0.28401554296154691, 0.00047248457391328279, 0.12874742662047847, -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.0087460940474057766, -0.0048703529934515741, -0.00039174037337694705, 0.00067544940645056933, -0.00011747678412476953}},
        {"daubechies9", {0.038077947363878345, 0.24383467461259034, 0.60482312369011115, 0.65728807805130052, 0.13319738582500756, -0.29327378327917492, -0.096840783222976456, 0.14854074933810638, 0.03072568147933338, -0.067632829061329974, 0.00025094711483145197, 0.022361662123679096, -0.0047232047577513972, -0.0042815036824634303, 0.0018476468830562265, 0.00023038576352319597, -0.00025196318894271012, 3.9347320316271603e-05}},
        {"daubechies10", {0.026670057900555554, 0.1881768000776915, 0.52720118893172563, 0.68845903945360354, 0.28117234366057747, -0.24984642432731538, -0.19594627437737705, 0.12736934033579325, 0.093057364603572348, -0.071394147166397082, -0.029457536821875813, 0.033212674059341002, 0.0036065535669561697, -0.010733175483330575, 0.0013953517470529011, 0.0019924052951850561, -0.00068585669495971162, -0.00011646685512928545, 9.3588670320069592e-05, -1.3264202894521244e-05}},
        {"symmlet4", {-0.075765714789502212, -0.029635527646002493, 0.49761866763277501, 0.8037387518051321, 0.29785779560530606, -0.099219543576633526, -0.012603967262031304, 0.032223100604051466}},
        {"symmlet5", {0.019538882735249827, -0.021101834024689042, -0.17532808990805623, 0.016602105764510849, 0.63397896345679206, 0.72340769040404074, 0.19939753397685558, -0.039134249302313844, 0.029519490925706261, 0.027333068344998768}},
        {"symmlet6", {-0.0054306106797731646, 0.012258959571791111, 0.049409108238577998, -0.083539310725342167, -0.25088126798679344, 0.12493215211032591, 0.71255044785119148, 0.61474193249679887, 0.15151009133736276, 0.016586076945922946, 0.049949012425981938, 0.02212697078705091}},
        {"symmlet7", {0.01737640342688752, 0.056826755006918209, 0.058757244933576737, 0.13753686415006175, 0.50985266340733759, 0.73154887828784498, 0.25879152712708758, -0.27111183400765448, -0.17919011734188062, 0.063478560396276987, 0.046701748705149607, -0.012757197858304654, -0.005182689071610876, 0.0015847552114046991}},
        {"symmlet8", {-0.0048832911885537279, -0.0088496811247057734, 0.021230747535647344, 0.041811091892040589, 0.002392593609562098, 0.16789843534361193, 0.62617372017189954, 0.69715557265640515, 0.12754219081913493, -0.24902749704129726, -0.086825675693842183, 0.069476215410331083, 0.023848851511729462, -0.012666431715613703, -0.0023723555790299135, 0.0013090757657754839}},
        {"coiflet1", {-0.07273261951252645, 0.33789766245748176, 0.85257202021160039, 0.38486484686485772, -0.07273261951252645, -0.015655728135791993}},
        {"coiflet2", {0.016387336463203641, -0.041464936786871777, -0.067372554723725595, 0.38611006682276283, 0.81272363544941351, 0.41700518442323903, -0.076488599078280761, -0.059434418646431085, 0.02368017194684777, 0.0056114348193688343, -0.0018232088709110321, -0.00072054944552034698}},
        {"coiflet3", {-0.0037935128643808015, 0.0077825964256727454, 0.023452696142077165, -0.065771911281469364, -0.061123390002972539, 0.40517690240911819, 0.79377722262608719, 0.42848347637737, -0.071799821619154838, -0.082301927106299813, 0.034555027573297731, 0.015880544863669452, -0.0090079761367306242, -0.0025745176881367968, 0.0011175187708306303, 0.00046621695982040288, -7.0983302506379004e-05, -3.4599773197272774e-05}},
    };
    return table;
}

}  // namespace detail

/// Largest admissible residual of the filter identities checked at load time.
inline constexpr double kFilterTolerance = 1e-12;

/// Checks sum(h) = sqrt(2) and the QMF orthonormality conditions
/// sum_r h[r] h[r-2m] = delta_{0,m}; returns the worst absolute residual.
inline double filter_residual(const std::vector<double>& h) {
    const int L = static_cast<int>(h.size());
    double sum = 0.0;
    for (double v : h) sum += v;
    double worst = std::fabs(sum - std::sqrt(2.0));
    for (int m = 0; m < L / 2; ++m) {
        double s = 0.0;
        for (int n = 2 * m; n < L; ++n) s += h[n] * h[n - 2 * m];
        worst = std::max(worst, std::fabs(s - (m == 0 ? 1.0 : 0.0)));
    }
    return worst;
}

/// Names of all filters in the catalog, in catalog order.
inline std::vector<std::string> supported_filters() {
    std::vector<std::string> names;
    for (const auto& row : detail::filter_table()) names.emplace_back(row.name);
    return names;
}

/// Loads a filter by name and re-validates the two-scale normalization and
/// QMF identities before handing it out.
inline WaveletFilter load_filter(const std::string& name) {
    for (const auto& row : detail::filter_table()) {
        if (name == row.name) {
            WaveletFilter f{row.name, row.h};
            const int L = f.support_length();
            if (L < 2 || L % 2 != 0)
                throw UnknownFilter("filter '" + name + "' has invalid tap count");
            const double res = filter_residual(f.h);
            if (res > kFilterTolerance)
                throw UnknownFilter("filter '" + name + "' fails QMF validation, residual " +
                                    std::to_string(res));
            return f;
        }
    }
    std::string msg = "unknown filter '" + name + "'; supported:";
    for (const auto& n : supported_filters()) msg += " " + n;
    throw UnknownFilter(msg);
}

}  // namespace wavedens
