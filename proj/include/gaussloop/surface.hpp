#ifndef GAUSSLOOP_SURFACE_HPP
#define GAUSSLOOP_SURFACE_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gauss_core.hpp"
#include "invariants.hpp"
#include "reidemeister.hpp"
#include "weights.hpp"

namespace gaussloop {

// coordinates in the symplectic basis a_1, b_1, ..., a_g, b_g
using HomologyClass = std::vector<int>;

inline bool is_zero_class(const HomologyClass& c) {
    for (int x : c)
        if (x != 0) return false;
    return true;
}

inline HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b) {
    if (a.size() != b.size()) throw gauss_error("homology classes of different genus");
    HomologyClass r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline HomologyClass sub_classes(const HomologyClass& a, const HomologyClass& b) {
    if (a.size() != b.size()) throw gauss_error("homology classes of different genus");
    HomologyClass r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline std::string class_str(const HomologyClass& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

// a . J . b, J = block sum of [[0,1],[-1,0]]
inline int intersection_number(const HomologyClass& a, const HomologyClass& b) {
    if (a.size() != b.size() || a.size() % 2) throw gauss_error("intersection_number: genus mismatch");
    int s = 0;
    for (std::size_t i = 0; i + 1 < a.size(); i += 2) s += a[i] * b[i + 1] - a[i + 1] * b[i];
    return s;
}

inline int omega(const HomologyClass& a, const HomologyClass& b) { return std::abs(intersection_number(a, b)); }

struct LabeledSurfaceDiagram {
    GaussDiagram base;
    int genus = 0;
    std::vector<HomologyClass> arcs;  // arc m runs from endpoint m to endpoint m+1

    int arc_count() const { return base.length() == 0 ? 1 : base.length(); }

    void validate() const {
        if (genus < 0) throw gauss_error("genus must be non-negative");
        if (static_cast<int>(arcs.size()) != arc_count())
            throw gauss_error("expected " + std::to_string(arc_count()) + " arc labels, got " +
                              std::to_string(arcs.size()));
        for (auto& c : arcs)
            if (static_cast<int>(c.size()) != 2 * genus) throw gauss_error("arc label has wrong length for genus");
        if (base.has_singular()) throw gauss_error("labeled diagrams cannot carry singular arrows");
    }

    HomologyClass total() const {
        HomologyClass t(2 * genus, 0);
        for (auto& c : arcs) t = add_classes(t, c);
        return t;
    }
};

inline LabeledSurfaceDiagram zero_labeled(const GaussDiagram& d, int genus) {
    LabeledSurfaceDiagram s{d, genus, {}};
    s.arcs.assign(s.arc_count(), HomologyClass(2 * genus, 0));
    return s;
}

inline LabeledSurfaceDiagram parse_labeled(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(b, e - b + 1));
    }
    if (lines.size() < 2) throw gauss_error("labeled diagram needs a genus line and a Gauss code line");
    static const std::regex genus_re(R"(genus\s+(\d+))");
    std::smatch m;
    if (!std::regex_match(lines[0], m, genus_re)) throw gauss_error("first line must be 'genus g'");
    LabeledSurfaceDiagram d;
    d.genus = std::stoi(m[1]);
    // an empty diagram writes "-" as its code
    d.base = lines[1] == "-" ? GaussDiagram() : parse_gauss_code(lines[1]);
    d.arcs.assign(d.arc_count(), {});
    std::vector<bool> seen(d.arc_count(), false);
    static const std::regex arc_re(R"(arc\s+(\d+)\s*:(.*))");
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (!std::regex_match(lines[i], m, arc_re)) throw gauss_error("bad arc line: " + lines[i]);
        int k = std::stoi(m[1]);
        if (k >= d.arc_count()) throw gauss_error("arc index out of range: " + std::to_string(k));
        if (seen[k]) throw gauss_error("arc " + std::to_string(k) + " listed twice");
        seen[k] = true;
        std::istringstream cs(m[2].str());
        int v;
        while (cs >> v) d.arcs[k].push_back(v);
        if (!cs.eof()) throw gauss_error("bad integer in arc line: " + lines[i]);
    }
    for (int k = 0; k < d.arc_count(); ++k)
        if (!seen[k]) throw gauss_error("missing arc " + std::to_string(k));
    d.validate();
    return d;
}

inline std::string format_labeled(const LabeledSurfaceDiagram& d) {
    std::string s = "genus " + std::to_string(d.genus) + "\n" + (d.base.empty() ? "-" : d.base.code()) + "\n";
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        s += "arc " + std::to_string(k) + ":";
        for (int v : d.arcs[k]) s += " " + std::to_string(v);
        s += "\n";
    }
    return s;
}

// Class-labeled generator. TH: a = T-private, b = middle, c = H-private.
// TT/HH: a <= c are the two private classes, b the middle.
struct SigmaConfig {
    ConfigKind kind = ConfigKind::TH;
    HomologyClass a, b, c;
    auto operator<=>(const SigmaConfig&) const = default;
};

inline SigmaConfig make_sigma_config(ConfigKind k, HomologyClass a, HomologyClass b, HomologyClass c) {
    if (k != ConfigKind::TH && c < a) std::swap(a, c);
    return {k, std::move(a), std::move(b), std::move(c)};
}

inline std::string to_string(const SigmaConfig& g) {
    if (g.kind == ConfigKind::TH)
        return std::string("TH(") + class_str(g.a) + "," + class_str(g.b) + "," + class_str(g.c) + ")";
    return std::string(config_name(g.kind)) + "({" + class_str(g.a) + "," + class_str(g.c) + "}," + class_str(g.b) + ")";
}

using RawASigma = std::map<SigmaConfig, long>;

inline void add_term(RawASigma& r, const SigmaConfig& g, long k) {
    if (k == 0) return;
    long& v = r[g];
    v += k;
    if (v == 0) r.erase(g);
}

// Reduced form: TH(T-private, middle, H-private) terms with no zero class.
class ASigmaCombination {
public:
    using Key = std::array<HomologyClass, 3>;

    const std::map<Key, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long coeff(const HomologyClass& a, const HomologyClass& b, const HomologyClass& c) const {
        auto it = terms_.find({a, b, c});
        return it == terms_.end() ? 0 : it->second;
    }
    void add(const Key& k, long v) {
        if (v == 0) return;
        long& c = terms_[k];
        c += v;
        if (c == 0) terms_.erase(k);
    }
    bool operator==(const ASigmaCombination&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, v] : terms_) {
            if (!out.empty()) out += v > 0 ? " + " : " - ";
            else if (v < 0) out += "-";
            long a = v < 0 ? -v : v;
            if (a != 1) out += std::to_string(a) + "*";
            out += to_string(SigmaConfig{ConfigKind::TH, k[0], k[1], k[2]});
        }
        return out;
    }

private:
    std::map<Key, long> terms_;
};

inline bool has_zero_class(const SigmaConfig& g) {
    return is_zero_class(g.a) || is_zero_class(g.b) || is_zero_class(g.c);
}

inline std::vector<SigmaConfig> rewrite_ASigma(const SigmaConfig& g) {
    if (has_zero_class(g)) return {};
    switch (g.kind) {
    case ConfigKind::TH: return {g};
    case ConfigKind::TT:
        return {{ConfigKind::TH, g.c, g.a, g.b}, {ConfigKind::TH, g.a, g.c, g.b}};
    case ConfigKind::HH:
        return {{ConfigKind::TH, g.b, g.a, g.c}, {ConfigKind::TH, g.b, g.c, g.a}};
    }
    return {};
}

inline ASigmaCombination normal_form_ASigma(const RawASigma& raw,
                                            const std::function<std::size_t(std::size_t)>& pick = {}) {
    std::vector<std::pair<SigmaConfig, long>> work(raw.begin(), raw.end());
    ASigmaCombination out;
    while (!work.empty()) {
        std::size_t i = pick ? pick(work.size()) % work.size() : work.size() - 1;
        auto [g, k] = work[i];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        auto next = rewrite_ASigma(g);
        if (next.size() == 1 && next[0] == g) {
            out.add({g.a, g.b, g.c}, k);
            continue;
        }
        for (auto& n : next) work.emplace_back(n, k);
    }
    return out;
}

// All classes of the given genus with every coordinate in [lo, hi].
inline std::vector<HomologyClass> class_box(int genus, int lo, int hi) {
    std::vector<HomologyClass> out{HomologyClass{}};
    for (int i = 0; i < 2 * genus; ++i) {
        std::vector<HomologyClass> next;
        for (auto& c : out)
            for (int v = lo; v <= hi; ++v) {
                next.push_back(c);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

// Calls fn on every relation instance over the class box: zero-class generators of each
// shape and the two 3-term families.
inline void for_each_relation_ASigma(int genus, int lo, int hi, const std::function<void(const RawASigma&)>& fn) {
    auto box = class_box(genus, lo, hi);
    for (auto& a : box)
        for (auto& b : box)
            for (auto& c : box) {
                bool zero = is_zero_class(a) || is_zero_class(b) || is_zero_class(c);
                for (ConfigKind k : {ConfigKind::TT, ConfigKind::TH, ConfigKind::HH}) {
                    if (!zero) break;
                    if (k != ConfigKind::TH && c < a) continue;
                    fn({{SigmaConfig{k, a, b, c}, 1}});
                }
                if (c < a) continue;
                RawASigma tt;
                add_term(tt, {ConfigKind::TT, a, b, c}, 1);
                add_term(tt, {ConfigKind::TH, c, a, b}, -1);
                add_term(tt, {ConfigKind::TH, a, c, b}, -1);
                fn(tt);
                RawASigma hh;
                add_term(hh, {ConfigKind::HH, a, b, c}, 1);
                add_term(hh, {ConfigKind::TH, b, a, c}, -1);
                add_term(hh, {ConfigKind::TH, b, c, a}, -1);
                fn(hh);
            }
}

namespace detail {
// class of the arcs strictly inside the private span start -> end
inline HomologyClass span_class(const LabeledSurfaceDiagram& d, std::pair<int, int> span) {
    const int L = d.base.length();
    HomologyClass c(2 * d.genus, 0);
    for (int m = span.first; m != span.second; m = (m + 1) % L) c = add_classes(c, d.arcs[m]);
    return c;
}
}  // namespace detail

inline RawASigma phi_Sigma_raw(const LabeledSurfaceDiagram& d) {
    d.validate();
    RawASigma r;
    const HomologyClass total = d.total();
    for (auto [p, q] : parallel_pairs(d.base)) {
        SmoothResult sm = smooth_pair(d.base, p, q);
        HomologyClass cp = detail::span_class(d, sm.span_p);
        HomologyClass cq = detail::span_class(d, sm.span_q);
        HomologyClass mid = sub_classes(sub_classes(total, cp), cq);
        long s = pair_sign(d.base, p, q);
        if (sm.kind_p == sm.kind_q) {
            ConfigKind k = sm.kind_p == ArcKind::T ? ConfigKind::TT : ConfigKind::HH;
            add_term(r, make_sigma_config(k, cp, mid, cq), s);
        } else if (sm.kind_p == ArcKind::T) {
            add_term(r, {ConfigKind::TH, cp, mid, cq}, s);
        } else {
            add_term(r, {ConfigKind::TH, cq, mid, cp}, s);
        }
    }
    return r;
}

inline ASigmaCombination phi_Sigma(const LabeledSurfaceDiagram& d) { return normal_form_ASigma(phi_Sigma_raw(d)); }

namespace detail {
inline void require_gv_admissible(const HomologyClass& a, const HomologyClass& b, const HomologyClass& c) {
    if (a.size() != b.size() || b.size() != c.size()) throw gauss_error("gv_functional: genus mismatch");
    if (is_zero_class(a) || is_zero_class(b) || is_zero_class(c)) throw gauss_error("gv_functional: zero class");
    bool distinct = a != b && b != c && a != c;
    bool second = a == c && b != c;
    if (!distinct && !second) throw gauss_error("gv_functional: classes must be distinct, or alpha = gamma != beta");
}
}  // namespace detail

// <F_{a,b,c}, g> with F_{a,b,c} = TH(a,b,c) + TT({a,b},c) + HH({b,c},a)
inline int pair_gv(const SigmaConfig& g, const HomologyClass& a, const HomologyClass& b, const HomologyClass& c) {
    auto same = [](const HomologyClass& x, const HomologyClass& y, const HomologyClass& u, const HomologyClass& v) {
        return (x == u && y == v) || (x == v && y == u);
    };
    switch (g.kind) {
    case ConfigKind::TH: return g.a == a && g.b == b && g.c == c;
    case ConfigKind::TT: return g.b == c && same(g.a, g.c, a, b);
    case ConfigKind::HH: return g.b == a && same(g.a, g.c, b, c);
    }
    return 0;
}

inline long gv_functional(const RawASigma& raw, const HomologyClass& a, const HomologyClass& b, const HomologyClass& c) {
    detail::require_gv_admissible(a, b, c);
    long s = 0;
    for (auto& [g, v] : raw) s += v * pair_gv(g, a, b, c);
    return s;
}

inline long gv_functional(const ASigmaCombination& x, const HomologyClass& a, const HomologyClass& b,
                          const HomologyClass& c) {
    detail::require_gv_admissible(a, b, c);
    return x.coeff(a, b, c);
}

inline PairConfig hat_config(const SigmaConfig& g) {
    if (g.kind == ConfigKind::TH) return {ConfigKind::TH, omega(g.a, g.b), omega(g.c, g.b), omega(g.a, g.c)};
    int x = omega(g.a, g.b), y = omega(g.c, g.b);
    return {g.kind, std::min(x, y), std::max(x, y), omega(g.a, g.c)};
}

inline ACombination hat_phi_Sigma(const RawASigma& raw) {
    RawA r;
    for (auto& [g, v] : raw) add_term(r, hat_config(g), v);
    return normal_form_A(r);
}

inline ACombination hat_phi_Sigma(const ASigmaCombination& x) {
    RawA r;
    for (auto& [k, v] : x.terms()) add_term(r, hat_config({ConfigKind::TH, k[0], k[1], k[2]}), v);
    return normal_form_A(r);
}

inline GaussDiagram project_to_virtual(const LabeledSurfaceDiagram& d) { return d.base; }

struct CommuteReport {
    bool commutes = false;
    ACombination lhs, rhs;
};

// Only meaningful for labelings realized by an actual curve on the surface.
inline CommuteReport commuting_check(const LabeledSurfaceDiagram& d) {
    CommuteReport r;
    r.lhs = hat_phi_Sigma(phi_Sigma(d));
    r.rhs = phi_general(project_to_virtual(d));
    r.commutes = r.lhs == r.rhs;
    return r;
}

// Labeled moves. Insertions split the host arc's class at random and give the new inner
// arcs the zero class; removals and R3 need the arcs they collapse to be zero.
namespace detail {

inline std::vector<HomologyClass> insert_arcs(const std::vector<HomologyClass>& arcs, int L, int g, int k,
                                              std::mt19937_64& rng) {
    const std::size_t dim = arcs[0].size();
    const HomologyClass z(dim, 0);
    if (L == 0) {
        std::vector<HomologyClass> out(k - 1, z);
        out.push_back(arcs[0]);
        return out;
    }
    int m = (g - 1 + L) % L;
    HomologyClass a1(dim), a2(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a1[i] = static_cast<int>(rng() % 3) - 1;
        a2[i] = arcs[m][i] - a1[i];
    }
    std::vector<HomologyClass> out;
    if (g == 0) {
        out.assign(k - 1, z);
        out.push_back(a2);
        out.insert(out.end(), arcs.begin(), arcs.begin() + (L - 1));
        out.push_back(a1);
        return out;
    }
    out.assign(arcs.begin(), arcs.begin() + m);
    out.push_back(a1);
    for (int i = 0; i < k - 1; ++i) out.push_back(z);
    out.push_back(a2);
    out.insert(out.end(), arcs.begin() + g, arcs.end());
    return out;
}

// arcs after deleting the endpoints of `gone`: each kept endpoint's arc absorbs the arcs
// up to the next kept endpoint
inline std::vector<HomologyClass> merge_arcs(const LabeledSurfaceDiagram& d, const std::set<int>& gone) {
    const auto& seq = d.base.sequence();
    const int L = d.base.length();
    std::vector<int> keep;
    for (int i = 0; i < L; ++i)
        if (!gone.count(seq[i].label)) keep.push_back(i);
    if (keep.empty()) return {d.total()};
    std::vector<HomologyClass> out;
    for (std::size_t idx = 0; idx < keep.size(); ++idx) {
        int i = keep[idx], j = keep[(idx + 1) % keep.size()];
        HomologyClass c = d.arcs[i];
        for (int m = (i + 1) % L; m != j; m = (m + 1) % L) c = add_classes(c, d.arcs[m]);
        out.push_back(c);
    }
    return out;
}

inline bool arc_between_zero(const LabeledSurfaceDiagram& d, int x, int y) {
    const int L = d.base.length();
    int m = (x + 1) % L == y ? x : y;
    return is_zero_class(d.arcs[m]);
}

}  // namespace detail

inline std::vector<Move> labeled_sites(const LabeledSurfaceDiagram& d) {
    std::vector<Move> out;
    const int L = d.base.length();
    for (auto& m : r3_sites(d.base))
        if (is_zero_class(d.arcs[m.a]) && is_zero_class(d.arcs[m.b]) && is_zero_class(d.arcs[m.c])) out.push_back(m);
    for (auto& m : r2_remove_sites(d.base)) {
        const Arrow& a = d.base.arrow(m.a);
        const Arrow& b = d.base.arrow(m.b);
        if (detail::arc_between_zero(d, a.tail, b.tail) && detail::arc_between_zero(d, a.head, b.head))
            out.push_back(m);
    }
    for (auto& m : r1_remove_sites(d.base)) {
        const Arrow& a = d.base.arrow(m.a);
        if (L == 2 || detail::arc_between_zero(d, a.tail, a.head)) out.push_back(m);
    }
    return out;
}

inline LabeledSurfaceDiagram apply_labeled_move(const LabeledSurfaceDiagram& d, const Move& m, std::mt19937_64& rng) {
    LabeledSurfaceDiagram r{apply_move(d.base, m), d.genus, {}};
    const int L = d.base.length();
    switch (m.kind) {
    case MoveKind::R1_add: r.arcs = detail::insert_arcs(d.arcs, L, m.a, 2, rng); break;
    case MoveKind::R2_add: {
        auto mid = detail::insert_arcs(d.arcs, L, m.b, 2, rng);
        r.arcs = detail::insert_arcs(mid, L + 2, m.a, 2, rng);
        break;
    }
    case MoveKind::R1_remove: r.arcs = detail::merge_arcs(d, {m.a}); break;
    case MoveKind::R2_remove: r.arcs = detail::merge_arcs(d, {m.a, m.b}); break;
    case MoveKind::R3: r.arcs = d.arcs; break;
    }
    r.validate();
    return r;
}

inline LabeledSurfaceDiagram labeled_random_walk(const LabeledSurfaceDiagram& start, int steps, std::uint64_t seed,
                                                 int max_arrows = -1) {
    if (max_arrows < 0) max_arrows = start.base.size() + 12;
    std::mt19937_64 rng(seed);
    LabeledSurfaceDiagram d = start;
    for (int s = 0; s < steps; ++s) {
        auto sites = labeled_sites(d);
        const int L = d.base.length();
        bool grow = d.base.size() + 2 <= max_arrows;
        std::size_t total = sites.size() + (grow ? 2 : 0);
        if (total == 0) break;
        std::size_t k = rng() % total;
        Move m;
        if (k < sites.size()) {
            m = sites[k];
        } else if (k == sites.size()) {
            int g1 = static_cast<int>(rng() % (L + 1)), g2 = static_cast<int>(rng() % (L + 1));
            if (g1 > g2) std::swap(g1, g2);
            m = {MoveKind::R2_add, g1, g2, 0, rng() % 2 ? 1 : -1, rng() % 2 == 1, rng() % 2 == 1};
        } else {
            m = {MoveKind::R1_add, static_cast<int>(rng() % (L + 1)), 0, 0, rng() % 2 ? 1 : -1, rng() % 2 == 1};
        }
        d = apply_labeled_move(d, m, rng);
    }
    return d;
}

}  // namespace gaussloop

#endif
