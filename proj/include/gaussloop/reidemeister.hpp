#ifndef GAUSSLOOP_REIDEMEISTER_HPP
#define GAUSSLOOP_REIDEMEISTER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "gauss_core.hpp"
#include "group_a.hpp"

namespace gaussloop {

enum class MoveKind { R1_add, R1_remove, R2_add, R2_remove, R3 };

// R1_add:    a = gap, sign, f1 = head endpoint first
// R1_remove: a = arrow
// R2_add:    a <= b gaps; arrows get sign and -sign; f1 = the strand at gap a is the over
//            strand (carries the tails); f2 = the second strand meets the arrows in reverse
// R2_remove: a, b arrows
// R3:        a, b, c = first positions of the three two-endpoint strands
struct Move {
    MoveKind kind = MoveKind::R1_add;
    int a = 0, b = 0, c = 0;
    int sign = 1;
    bool f1 = false, f2 = false;
    bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
    auto i = [](int v) { return std::to_string(v); };
    switch (m.kind) {
    case MoveKind::R1_add:
        return "R1+ gap=" + i(m.a) + " sign=" + i(m.sign) + (m.f1 ? " head-first" : " tail-first");
    case MoveKind::R1_remove: return "R1- arrow=" + i(m.a);
    case MoveKind::R2_add:
        return "R2+ gaps=" + i(m.a) + "," + i(m.b) + " sign=" + i(m.sign) + (m.f1 ? " over-first" : " under-first") +
               (m.f2 ? " reversed" : " parallel");
    case MoveKind::R2_remove: return "R2- arrows=" + i(m.a) + "," + i(m.b);
    case MoveKind::R3: return "R3 strands=" + i(m.a) + "," + i(m.b) + "," + i(m.c);
    }
    return "?";
}

namespace detail {

// Local picture of three strands: for each strand (in circle order) two endpoints given as
// (local crossing id, is head), plus the sign of each local crossing. Canonical over
// rotations of the strand order, with ids numbered by first appearance.
using LocalPattern = std::array<int, 15>;

inline LocalPattern canon_local(const std::array<std::array<std::pair<int, bool>, 2>, 3>& strands,
                                const std::array<int, 3>& signs_by_id) {
    LocalPattern best{};
    bool have = false;
    for (int r = 0; r < 3; ++r) {
        std::array<int, 3> relabel{-1, -1, -1};
        int next = 0;
        LocalPattern key{};
        int k = 0;
        for (int s = 0; s < 3; ++s)
            for (auto& [id, head] : strands[(r + s) % 3]) {
                if (relabel[id] < 0) relabel[id] = next++;
                key[k++] = relabel[id];
                key[k++] = head ? 1 : 0;
            }
        for (int id = 0; id < 3; ++id) key[12 + relabel[id]] = signs_by_id[id];
        if (!have || key < best) best = key;
        have = true;
    }
    return best;
}

// Every oriented R3 picture, obtained from three straight lines in general position: each
// line direction, every height order, both cyclic orders in which the knot visits the
// strands, and the triangle on either side (the two sides of the move).
inline std::set<LocalPattern> build_r3_table() {
    std::set<LocalPattern> table;
    const double pi = std::acos(-1.0);
    const double base[3] = {0.0, 60.0, 120.0};
    for (int flips = 0; flips < 8; ++flips) {
        std::array<std::array<double, 2>, 3> D, N;
        for (int k = 0; k < 3; ++k) {
            double ang = (base[k] + 180.0 * ((flips >> k) & 1)) * pi / 180.0;
            D[k] = {std::cos(ang), std::sin(ang)};
            N[k] = {-D[k][1], D[k][0]};
        }
        std::array<int, 3> h{0, 1, 2};
        do {
            for (int order = 0; order < 2; ++order) {
                const std::array<int, 3> visit = order == 0 ? std::array<int, 3>{0, 1, 2} : std::array<int, 3>{0, 2, 1};
                for (double eps : {0.1, -0.1}) {
                    const double c[3] = {0.0, 0.0, eps};
                    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                    std::array<std::array<double, 2>, 3> pt;
                    std::array<int, 3> sg;
                    for (int id = 0; id < 3; ++id) {
                        int i = pairs[id][0], j = pairs[id][1];
                        double a = N[i][0], b = N[i][1], cc = N[j][0], dd = N[j][1];
                        double det = a * dd - b * cc;
                        pt[id] = {(c[i] * dd - b * c[j]) / det, (a * c[j] - cc * c[i]) / det};
                        int over = h[i] < h[j] ? i : j, under = over == i ? j : i;
                        double cr = D[over][0] * D[under][1] - D[over][1] * D[under][0];
                        sg[id] = cr > 0 ? 1 : -1;
                    }
                    std::array<std::array<std::pair<int, bool>, 2>, 3> strands;
                    for (int s = 0; s < 3; ++s) {
                        int k = visit[s];
                        std::vector<std::pair<double, std::pair<int, bool>>> ev;
                        for (int id = 0; id < 3; ++id) {
                            int i = pairs[id][0], j = pairs[id][1];
                            if (k != i && k != j) continue;
                            int other = k == i ? j : i;
                            double t = pt[id][0] * D[k][0] + pt[id][1] * D[k][1];
                            ev.push_back({t, {id, h[k] > h[other]}});
                        }
                        std::sort(ev.begin(), ev.end());
                        strands[s] = {ev[0].second, ev[1].second};
                    }
                    table.insert(canon_local(strands, sg));
                }
            }
        } while (std::next_permutation(h.begin(), h.end()));
    }
    return table;
}

inline const std::set<LocalPattern>& r3_table() {
    static const std::set<LocalPattern> table = build_r3_table();
    return table;
}

inline bool adjacent(int i, int j, int L) { return (i + 1) % L == j || (j + 1) % L == i; }

}  // namespace detail

inline std::vector<Move> r3_sites(const GaussDiagram& d) {
    std::vector<Move> out;
    const int L = d.length();
    if (L < 6) return out;
    const auto& seq = d.sequence();
    auto other_end = [&](int pos) {
        const Arrow& a = d.arrow(seq[pos].label);
        return seq[pos].head ? a.tail : a.head;
    };
    std::set<std::array<int, 3>> seen;
    for (int i = 0; i < L; ++i) {
        int i2 = (i + 1) % L;
        int x = seq[i].label, y = seq[i2].label;
        if (x == y) continue;
        int ox = other_end(i), oy = other_end(i2);
        for (int s2 : {(ox - 1 + L) % L, ox}) {
            int t2 = (s2 + 1) % L;
            int zpos = s2 == ox ? t2 : s2;
            int z = seq[zpos].label;
            if (z == x || z == y) continue;
            int oz = other_end(zpos);
            if (!detail::adjacent(oy, oz, L)) continue;
            int s3 = (oy + 1) % L == oz ? oy : oz;
            std::array<int, 3> starts{i, s2, s3};
            std::set<int> used;
            for (int s : starts) {
                used.insert(s);
                used.insert((s + 1) % L);
            }
            if (used.size() != 6) continue;
            std::sort(starts.begin(), starts.end());
            if (!seen.insert(starts).second) continue;
            std::array<std::array<std::pair<int, bool>, 2>, 3> strands;
            std::array<int, 3> ids{x, y, z};
            std::array<int, 3> signs;
            for (int k = 0; k < 3; ++k) signs[k] = d.sign(ids[k]);
            auto local = [&](int label) { return label == x ? 0 : label == y ? 1 : 2; };
            for (int s = 0; s < 3; ++s)
                for (int e = 0; e < 2; ++e) {
                    const Endpoint& ep = seq[(starts[s] + e) % L];
                    strands[s][e] = {local(ep.label), ep.head};
                }
            if (detail::r3_table().count(detail::canon_local(strands, signs)))
                out.push_back({MoveKind::R3, starts[0], starts[1], starts[2]});
        }
    }
    return out;
}

inline std::vector<Move> r1_remove_sites(const GaussDiagram& d) {
    std::vector<Move> out;
    for (auto& [l, a] : d.arrows())
        if (detail::adjacent(a.tail, a.head, d.length())) out.push_back({MoveKind::R1_remove, l});
    return out;
}

inline std::vector<Move> r2_remove_sites(const GaussDiagram& d) {
    std::vector<Move> out;
    const int L = d.length();
    const auto& seq = d.sequence();
    for (int i = 0; i < L; ++i) {
        const Endpoint& e = seq[i];
        const Endpoint& f = seq[(i + 1) % L];
        if (e.head || f.head || e.label == f.label) continue;
        const Arrow& a = d.arrow(e.label);
        const Arrow& b = d.arrow(f.label);
        if (a.sign != -b.sign) continue;
        if (!detail::adjacent(a.head, b.head, L)) continue;
        out.push_back({MoveKind::R2_remove, std::min(a.label, b.label), std::max(a.label, b.label)});
    }
    std::sort(out.begin(), out.end(), [](const Move& p, const Move& q) { return std::pair(p.a, p.b) < std::pair(q.a, q.b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline GaussDiagram apply_move(const GaussDiagram& d, const Move& m) {
    const int L = d.length();
    auto seq = d.sequence();
    auto signs = d.sign_map();
    auto sing = d.singular_set();
    switch (m.kind) {
    case MoveKind::R1_add: {
        if (m.a < 0 || m.a > L) throw gauss_error("R1 gap out of range");
        if (m.sign != 1 && m.sign != -1) throw gauss_error("bad sign");
        int l = d.max_label() + 1;
        std::vector<Endpoint> ins{{l, m.f1}, {l, !m.f1}};
        seq.insert(seq.begin() + m.a, ins.begin(), ins.end());
        signs[l] = m.sign;
        return GaussDiagram(std::move(seq), signs, sing);
    }
    case MoveKind::R1_remove: {
        const Arrow& a = d.arrow(m.a);
        if (!detail::adjacent(a.tail, a.head, L)) throw gauss_error("R1 site no longer matches");
        return remove_arrows(d, {m.a});
    }
    case MoveKind::R2_add: {
        if (m.a < 0 || m.b < m.a || m.b > L) throw gauss_error("R2 gaps out of range");
        if (m.sign != 1 && m.sign != -1) throw gauss_error("bad sign");
        int A = d.max_label() + 1, B = A + 1;
        std::vector<Endpoint> X{{A, !m.f1}, {B, !m.f1}};
        std::vector<Endpoint> Y{{A, m.f1}, {B, m.f1}};
        if (m.f2) std::swap(Y[0], Y[1]);
        seq.insert(seq.begin() + m.b, Y.begin(), Y.end());
        seq.insert(seq.begin() + m.a, X.begin(), X.end());
        signs[A] = m.sign;
        signs[B] = -m.sign;
        return GaussDiagram(std::move(seq), signs, sing);
    }
    case MoveKind::R2_remove: {
        auto sites = r2_remove_sites(d);
        Move key{MoveKind::R2_remove, std::min(m.a, m.b), std::max(m.a, m.b)};
        if (std::find(sites.begin(), sites.end(), key) == sites.end()) throw gauss_error("R2 site no longer matches");
        return remove_arrows(d, {m.a, m.b});
    }
    case MoveKind::R3: {
        auto sites = r3_sites(d);
        std::array<int, 3> s{m.a, m.b, m.c};
        std::sort(s.begin(), s.end());
        Move key{MoveKind::R3, s[0], s[1], s[2]};
        if (std::find(sites.begin(), sites.end(), key) == sites.end()) throw gauss_error("R3 site no longer matches");
        for (int st : s) std::swap(seq[st], seq[(st + 1) % L]);
        return GaussDiagram(std::move(seq), signs, sing);
    }
    }
    throw gauss_error("unknown move");
}

// All removals and R3 moves present in d, plus every insertion.
inline std::vector<Move> enumerate_moves(const GaussDiagram& d) {
    std::vector<Move> out = r3_sites(d);
    for (auto& m : r2_remove_sites(d)) out.push_back(m);
    for (auto& m : r1_remove_sites(d)) out.push_back(m);
    const int L = d.length();
    for (int g = 0; g <= L; ++g)
        for (int s : {1, -1})
            for (bool f : {false, true}) out.push_back({MoveKind::R1_add, g, 0, 0, s, f});
    for (int g1 = 0; g1 <= L; ++g1)
        for (int g2 = g1; g2 <= L; ++g2)
            for (int s : {1, -1})
                for (bool f1 : {false, true})
                    for (bool f2 : {false, true}) out.push_back({MoveKind::R2_add, g1, g2, 0, s, f1, f2});
    return out;
}

struct WalkResult {
    GaussDiagram diagram;
    std::vector<Move> moves;
    int r1_moves = 0;
};

// Each step picks a move kind uniformly among those available, then a site uniformly.
// Insertions are suppressed once the diagram has max_arrows arrows (default: start + 16),
// which keeps walks from drifting to large diagrams.
inline WalkResult random_walk(const GaussDiagram& start, int steps, std::uint64_t seed, bool frame_preserving,
                              int max_arrows = -1) {
    if (steps < 0) throw gauss_error("steps must be non-negative");
    if (max_arrows < 0) max_arrows = start.size() + 16;
    std::mt19937_64 rng(seed);
    auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    WalkResult r{start, {}, 0};
    for (int step = 0; step < steps; ++step) {
        const GaussDiagram& d = r.diagram;
        std::vector<std::vector<Move>> kinds;
        kinds.push_back(r3_sites(d));
        kinds.push_back(r2_remove_sites(d));
        if (!frame_preserving) kinds.push_back(r1_remove_sites(d));
        std::vector<std::vector<Move>*> avail;
        for (auto& k : kinds)
            if (!k.empty()) avail.push_back(&k);
        bool can_grow = d.size() + 2 <= max_arrows;
        int n_ins = can_grow ? (frame_preserving ? 1 : 2) : 0;
        std::size_t total = avail.size() + n_ins;
        if (total == 0) break;
        std::size_t pick = below(total);
        Move m;
        const int L = d.length();
        if (pick < avail.size()) {
            auto& v = *avail[pick];
            m = v[below(v.size())];
        } else if (pick == avail.size()) {
            int g1 = static_cast<int>(below(L + 1)), g2 = static_cast<int>(below(L + 1));
            if (g1 > g2) std::swap(g1, g2);
            m = {MoveKind::R2_add, g1, g2, 0, below(2) ? 1 : -1, below(2) == 1, below(2) == 1};
        } else {
            m = {MoveKind::R1_add, static_cast<int>(below(L + 1)), 0, 0, below(2) ? 1 : -1, below(2) == 1};
        }
        r.diagram = apply_move(d, m);
        r.moves.push_back(m);
        if (m.kind == MoveKind::R1_add || m.kind == MoveKind::R1_remove) ++r.r1_moves;
    }
    return r;
}

// Alternating sum over all resolutions for integer invariants; plain product for A-valued
// ones (every element of A is its own inverse).
template <class Inv>
auto finite_type_derivative(Inv&& inv, const GaussDiagram& d) {
    using R = std::decay_t<decltype(inv(std::declval<const GaussDiagram&>()))>;
    const auto k = d.singular_labels().size();
    if (k == 0) throw gauss_error("finite_type_derivative needs at least one singular arrow");
    if (k > 20) throw gauss_error("too many singular arrows");
    R acc{};
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sigma(k);
        int ones = 0;
        for (std::size_t b = 0; b < k; ++b) {
            sigma[b] = (mask >> b) & 1;
            ones += sigma[b];
        }
        R v = inv(resolve(d, sigma));
        if constexpr (std::is_same_v<R, AElement>) {
            acc *= v;
        } else {
            acc += (ones % 2 ? -v : v);
        }
    }
    return acc;
}

}  // namespace gaussloop

#endif
