#ifndef GAUSSLOOP_WEIGHTS_HPP
#define GAUSSLOOP_WEIGHTS_HPP

#include <cassert>
#include <cstdlib>
#include <map>
#include <string>
#include <tuple>

#include "gauss_core.hpp"

namespace gaussloop {

namespace detail {
// +1 iff the head of x sits in the open ccw arc tail(c) -> head(c)
inline int raw_index(const GaussDiagram& d, const Arrow& c, const Arrow& x) {
    return strictly_between(c.tail, x.head, c.head, d.length()) ? 1 : -1;
}
inline void require_nonsingular(const GaussDiagram& d, const char* what) {
    if (d.has_singular()) throw gauss_error(std::string(what) + " is undefined with singular arrows");
}
}  // namespace detail

inline int int_sign(const GaussDiagram& d, int c, int x) {
    if (!arrows_intersect(d, c, x)) throw gauss_error("int_sign needs intersecting arrows");
    return detail::raw_index(d, d.arrow(c), d.arrow(x));
}

inline int crossing_weight(const GaussDiagram& d, int c) {
    detail::require_nonsingular(d, "crossing weight");
    const Arrow& ac = d.arrow(c);
    int w = 0;
    for (auto& [l, x] : d.arrows())
        if (l != c && arrows_intersect(d, c, l)) w += x.sign * detail::raw_index(d, ac, x);
    return w;
}

inline std::map<int, int> crossing_weights(const GaussDiagram& d) {
    std::map<int, int> out;
    for (int l : d.labels()) out[l] = crossing_weight(d, l);
    return out;
}

// Relative weights of the three regions left after smoothing p and q.
// Region 1 is p's private arc, region 2 the middle, region 3 q's private arc.
struct WeightTriple {
    int w12 = 0, w13 = 0, w23 = 0;
    bool operator==(const WeightTriple&) const = default;
};

enum class ConfigKind { TT, TH, HH };

inline const char* config_name(ConfigKind k) {
    switch (k) {
    case ConfigKind::TT: return "TT";
    case ConfigKind::TH: return "TH";
    case ConfigKind::HH: return "HH";
    }
    return "?";
}

// A labeled pair configuration. For TH: x = w(T-private, middle), y = w(H-private, middle),
// z = w(T-private, H-private). For TT and HH the chords are interchangeable, so x <= y are
// the two private/middle weights and z is the private/private weight.
struct PairConfig {
    ConfigKind kind = ConfigKind::TH;
    int x = 0, y = 0, z = 0;
    auto operator<=>(const PairConfig&) const = default;
};

inline std::string to_string(const PairConfig& c) {
    std::string s = config_name(c.kind);
    if (c.kind == ConfigKind::TH)
        return s + "[" + std::to_string(c.x) + "," + std::to_string(c.y) + ";" + std::to_string(c.z) + "]";
    return s + "[{" + std::to_string(c.x) + "," + std::to_string(c.y) + "};" + std::to_string(c.z) + "]";
}

namespace detail {
inline WeightTriple relative_weights(const GaussDiagram& d, const SmoothResult& sm) {
    const int p = sm.p, q = sm.q;
    const Arrow& ap = d.arrow(p);
    const Arrow& aq = d.arrow(q);
    // a_13 may be either smoothed arrow; the smaller id is used and the other checked
    const Arrow& a13 = p < q ? ap : aq;
    const Arrow& a13_alt = p < q ? aq : ap;
    int s12 = 0, s13 = 0, s13_alt = 0, s23 = 0;
    for (auto& [l, regions] : sm.crossing_arcs) {
        auto [r1, r2] = regions;
        if (r1 == r2) continue;
        const Arrow& c = d.arrow(l);
        int lo = std::min(r1, r2), hi = std::max(r1, r2);
        if (lo == 0 && hi == 1) s12 += c.sign * detail::raw_index(d, ap, c);
        else if (lo == 1 && hi == 2) s23 += c.sign * detail::raw_index(d, aq, c);
        else {
            s13 += c.sign * detail::raw_index(d, a13, c);
            s13_alt += c.sign * detail::raw_index(d, a13_alt, c);
        }
    }
    assert(std::abs(s13) == std::abs(s13_alt));
    (void)s13_alt;
    return {std::abs(s12), std::abs(s13), std::abs(s23)};
}
}  // namespace detail

inline WeightTriple relative_weights(const GaussDiagram& d, int p, int q) {
    detail::require_nonsingular(d, "relative weight");
    return detail::relative_weights(d, smooth_pair(d, p, q));
}

inline PairConfig classify_pair(const GaussDiagram& d, int p, int q) {
    detail::require_nonsingular(d, "classify_pair");
    SmoothResult sm = smooth_pair(d, p, q);
    WeightTriple w = detail::relative_weights(d, sm);
    PairConfig c;
    c.z = w.w13;
    if (sm.kind_p == sm.kind_q) {
        c.kind = sm.kind_p == ArcKind::T ? ConfigKind::TT : ConfigKind::HH;
        c.x = std::min(w.w12, w.w23);
        c.y = std::max(w.w12, w.w23);
    } else {
        c.kind = ConfigKind::TH;
        bool p_is_t = sm.kind_p == ArcKind::T;
        c.x = p_is_t ? w.w12 : w.w23;
        c.y = p_is_t ? w.w23 : w.w12;
    }
    return c;
}

inline int pair_sign(const GaussDiagram& d, int p, int q) { return d.sign(p) * d.sign(q); }

}  // namespace gaussloop

#endif
