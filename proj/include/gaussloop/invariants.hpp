#ifndef GAUSSLOOP_INVARIANTS_HPP
#define GAUSSLOOP_INVARIANTS_HPP

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gauss_core.hpp"
#include "group_a.hpp"
#include "weights.hpp"

namespace gaussloop {

// Formal integer sum of labeled pair configurations, before any relation is applied.
using RawA = std::map<PairConfig, long>;

inline void add_term(RawA& r, const PairConfig& c, long k) {
    if (k == 0) return;
    long& v = r[c];
    v += k;
    if (v == 0) r.erase(c);
}

// Element of the quotient group in reduced form: a combination of TH[x,y;z] with
// x, y, z pairwise distinct. TT and HH are rewritten through
//   TT[{a,b};c] = TH[c,a;b] + TH[c,b;a],   HH[{a,b};c] = TH[a,c;b] + TH[b,c;a].
class ACombination {
public:
    using Key = std::array<int, 3>;

    const std::map<Key, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long coeff(int x, int y, int z) const {
        auto it = terms_.find({x, y, z});
        return it == terms_.end() ? 0 : it->second;
    }
    void add(const Key& k, long v) {
        if (v == 0) return;
        long& c = terms_[k];
        c += v;
        if (c == 0) terms_.erase(k);
    }
    ACombination& operator+=(const ACombination& o) {
        for (auto& [k, v] : o.terms_) add(k, v);
        return *this;
    }
    bool operator==(const ACombination&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, v] : terms_) {
            if (!out.empty()) out += v > 0 ? " + " : " - ";
            else if (v < 0) out += "-";
            long a = v < 0 ? -v : v;
            if (a != 1) out += std::to_string(a) + "*";
            out += to_string(PairConfig{ConfigKind::TH, k[0], k[1], k[2]});
        }
        return out;
    }

private:
    std::map<Key, long> terms_;
};

inline bool has_repeated_labels(const PairConfig& c) { return c.x == c.y || c.y == c.z || c.x == c.z; }

// One rewrite step: the terms a configuration is replaced by (empty when it is a relation).
inline std::vector<PairConfig> rewrite_A(const PairConfig& c) {
    if (has_repeated_labels(c)) return {};
    switch (c.kind) {
    case ConfigKind::TH: return {c};
    case ConfigKind::TT:
        return {{ConfigKind::TH, c.z, c.x, c.y}, {ConfigKind::TH, c.z, c.y, c.x}};
    case ConfigKind::HH:
        return {{ConfigKind::TH, c.x, c.z, c.y}, {ConfigKind::TH, c.y, c.z, c.x}};
    }
    return {};
}

// pick(n) chooses which of n pending terms to rewrite next; the result does not depend on it.
inline ACombination normal_form_A(const RawA& raw, const std::function<std::size_t(std::size_t)>& pick = {}) {
    std::vector<std::pair<PairConfig, long>> work(raw.begin(), raw.end());
    ACombination out;
    while (!work.empty()) {
        std::size_t i = pick ? pick(work.size()) % work.size() : work.size() - 1;
        auto [c, k] = work[i];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        auto next = rewrite_A(c);
        if (next.size() == 1 && next[0] == c) {
            out.add({c.x, c.y, c.z}, k);
            continue;
        }
        for (auto& n : next) work.emplace_back(n, k);
    }
    return out;
}

// Relation generators with labels in [0, bound]: repeated-label configurations and the two
// three-term families, each as a raw formal sum.
inline std::vector<RawA> relation_instances_A(int bound) {
    std::vector<RawA> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c) {
                for (ConfigKind k : {ConfigKind::TT, ConfigKind::TH, ConfigKind::HH}) {
                    if (k != ConfigKind::TH && a > b) continue;
                    PairConfig g{k, a, b, c};
                    if (has_repeated_labels(g)) out.push_back({{g, 1}});
                }
                if (a <= b) {
                    RawA tt;
                    add_term(tt, {ConfigKind::TT, a, b, c}, 1);
                    add_term(tt, {ConfigKind::TH, c, a, b}, -1);
                    add_term(tt, {ConfigKind::TH, c, b, a}, -1);
                    out.push_back(tt);
                    RawA hh;
                    add_term(hh, {ConfigKind::HH, a, b, c}, 1);
                    add_term(hh, {ConfigKind::TH, a, c, b}, -1);
                    add_term(hh, {ConfigKind::TH, b, c, a}, -1);
                    out.push_back(hh);
                }
            }
    return out;
}

namespace detail {
inline void require_distinct(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) throw gauss_error("indices must be non-negative");
    if (i == j || j == k || i == k) throw gauss_error("indices must be pairwise distinct");
}
}  // namespace detail

// <F_{i,j,k}, c> with F_{i,j,k} = TH[i,j;k] + TT[{j,k};i] + HH[{i,k};j]
inline int pair_F(const PairConfig& c, int i, int j, int k) {
    auto same = [](int x, int y, int a, int b) { return (x == a && y == b) || (x == b && y == a); };
    switch (c.kind) {
    case ConfigKind::TH: return c.x == i && c.y == j && c.z == k;
    case ConfigKind::TT: return c.z == i && same(c.x, c.y, j, k);
    case ConfigKind::HH: return c.z == j && same(c.x, c.y, i, k);
    }
    return 0;
}

inline long pair_F(const RawA& r, int i, int j, int k) {
    long s = 0;
    for (auto& [c, v] : r) s += v * pair_F(c, i, j, k);
    return s;
}

inline RawA phi_general_raw(const GaussDiagram& d) {
    detail::require_nonsingular(d, "phi");
    RawA r;
    for (auto [p, q] : parallel_pairs(d)) add_term(r, classify_pair(d, p, q), pair_sign(d, p, q));
    return r;
}

inline ACombination phi_general(const GaussDiagram& d) { return normal_form_A(phi_general_raw(d)); }

inline long phi_ijk(const GaussDiagram& d, int i, int j, int k) {
    detail::require_distinct(i, j, k);
    detail::require_nonsingular(d, "phi_ijk");
    long s = 0;
    for (auto [p, q] : parallel_pairs(d)) s += pair_sign(d, p, q) * pair_F(classify_pair(d, p, q), i, j, k);
    return s;
}

inline long functional_phi_hat(const ACombination& x, int i, int j, int k) {
    detail::require_distinct(i, j, k);
    long s = 0;
    for (auto& [key, v] : x.terms()) s += v * pair_F(PairConfig{ConfigKind::TH, key[0], key[1], key[2]}, i, j, k);
    return s;
}

inline AElement phi_fr(const GaussDiagram& d) {
    detail::require_nonsingular(d, "phi_fr");
    auto w = crossing_weights(d);
    AElement r;
    for (auto [p, q] : parallel_pairs(d)) r *= generator(w[p], w[q]);
    return r;
}

// x times the product of A_{0,w(a)} over the crossings a of d2
inline AElement writhe_correction(const AElement& x, const GaussDiagram& d2) {
    AElement r = x;
    for (auto& [l, w] : crossing_weights(d2)) r *= generator(0, w);
    return r;
}

struct SymmetryReport {
    AElement phi_fr;
    AElement reflected;  // image under i -> -i-1, the value for inverse, mirror and switch
    AElement shifted;    // image under i -> i-1, reported for comparison only
    bool detects_noninvertible = false;
    bool detects_chiral = false;
    bool detects_switch = false;
};

inline SymmetryReport symmetry_report(const GaussDiagram& d) {
    SymmetryReport r;
    r.phi_fr = phi_fr(d);
    r.reflected = reflect(r.phi_fr);
    r.shifted = shift(r.phi_fr);
    bool differ = r.phi_fr != r.reflected;
    r.detects_noninvertible = r.detects_chiral = r.detects_switch = differ;
    return r;
}

inline AElement phi_fr_connect_ratio(const GaussDiagram& d1, const GaussDiagram& d2, int b1 = 0, int b2 = 0) {
    return phi_fr(connect_sum(d1, b1, d2, b2)) * phi_fr(d1) * phi_fr(d2);
}

// The ratio predicted from the weights p_1..p_n of d1 and q_1..q_m of d2 (label order):
// 1 if n, m even; E = A_{p1p2}...A_{p(n-1)pn} if n even, m odd; the same on d2 if n odd,
// m even; O1 O2 A_{pn qm} if both odd.
inline AElement connect_ratio_expected(const GaussDiagram& d1, const GaussDiagram& d2) {
    std::vector<int> p, q;
    for (auto& [l, w] : crossing_weights(d1)) p.push_back(w);
    for (auto& [l, w] : crossing_weights(d2)) q.push_back(w);
    auto pairs_product = [](const std::vector<int>& v, std::size_t upto) {
        AElement r;
        for (std::size_t i = 0; i + 1 < upto; i += 2) r *= generator(v[i], v[i + 1]);
        return r;
    };
    bool n_even = p.size() % 2 == 0, m_even = q.size() % 2 == 0;
    if (n_even && m_even) return {};
    if (n_even) return pairs_product(p, p.size());
    if (m_even) return pairs_product(q, q.size());
    return pairs_product(p, p.size() - 1) * pairs_product(q, q.size() - 1) * generator(p.back(), q.back());
}

}  // namespace gaussloop

#endif
