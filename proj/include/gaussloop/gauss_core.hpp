#ifndef GAUSSLOOP_GAUSS_CORE_HPP
#define GAUSSLOOP_GAUSS_CORE_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gaussloop {

class gauss_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public gauss_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : gauss_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct Endpoint {
    int label;
    bool head;
    bool operator==(const Endpoint&) const = default;
};

struct Arrow {
    int label = 0;
    int tail = -1;  // position on the circle
    int head = -1;
    int sign = 1;
    bool singular = false;
};

// true iff x lies strictly inside the counterclockwise arc a -> b on a circle of L points
inline bool strictly_between(int a, int x, int b, int L) {
    int dx = ((x - a) % L + L) % L;
    int db = ((b - a) % L + L) % L;
    return dx > 0 && dx < db;
}

class GaussDiagram {
public:
    GaussDiagram() = default;

    // seq lists endpoints counterclockwise from the basepoint. signs gives the sign of
    // every label; singular marks crossings stored as their positive resolution.
    GaussDiagram(std::vector<Endpoint> seq, const std::map<int, int>& signs,
                 const std::set<int>& singular = {})
        : seq_(std::move(seq)) {
        for (int i = 0; i < static_cast<int>(seq_.size()); ++i) {
            const Endpoint& e = seq_[i];
            if (e.label <= 0) throw gauss_error("arrow labels must be positive");
            Arrow& a = arrows_[e.label];
            a.label = e.label;
            int& slot = e.head ? a.head : a.tail;
            if (slot != -1)
                throw gauss_error("arrow " + std::to_string(e.label) + " has two " +
                                  (e.head ? "heads" : "tails"));
            slot = i;
        }
        for (auto& [l, a] : arrows_) {
            if (a.head == -1 || a.tail == -1)
                throw gauss_error("arrow " + std::to_string(l) + " is missing an endpoint");
            auto it = signs.find(l);
            if (it == signs.end()) throw gauss_error("no sign for arrow " + std::to_string(l));
            if (it->second != 1 && it->second != -1)
                throw gauss_error("sign of arrow " + std::to_string(l) + " must be +1 or -1");
            a.sign = it->second;
            a.singular = singular.count(l) > 0;
        }
        for (int l : singular)
            if (!arrows_.count(l)) throw gauss_error("singular mark on unknown arrow");
    }

    int size() const { return static_cast<int>(arrows_.size()); }
    int length() const { return static_cast<int>(seq_.size()); }
    bool empty() const { return arrows_.empty(); }
    const std::vector<Endpoint>& sequence() const { return seq_; }
    const std::map<int, Arrow>& arrows() const { return arrows_; }

    bool has_arrow(int label) const { return arrows_.count(label) > 0; }
    const Arrow& arrow(int label) const {
        auto it = arrows_.find(label);
        if (it == arrows_.end()) throw gauss_error("no arrow with id " + std::to_string(label));
        return it->second;
    }
    int sign(int label) const { return arrow(label).sign; }

    std::vector<int> labels() const {
        std::vector<int> out;
        for (auto& kv : arrows_) out.push_back(kv.first);
        return out;
    }
    int max_label() const { return arrows_.empty() ? 0 : arrows_.rbegin()->first; }

    bool has_singular() const {
        for (auto& kv : arrows_)
            if (kv.second.singular) return true;
        return false;
    }

    // singular labels ordered by first appearance from the basepoint
    std::vector<int> singular_labels() const {
        std::vector<int> out;
        std::set<int> seen;
        for (auto& e : seq_)
            if (arrows_.at(e.label).singular && seen.insert(e.label).second) out.push_back(e.label);
        return out;
    }

    std::map<int, int> sign_map() const {
        std::map<int, int> s;
        for (auto& [l, a] : arrows_) s[l] = a.sign;
        return s;
    }
    std::set<int> singular_set() const {
        std::set<int> s;
        for (auto& [l, a] : arrows_)
            if (a.singular) s.insert(l);
        return s;
    }

    std::string code() const {
        std::string out;
        for (auto& e : seq_) {
            const Arrow& a = arrows_.at(e.label);
            out += e.head ? 'U' : 'O';
            out += std::to_string(e.label);
            out += a.sign > 0 ? '+' : '-';
            if (a.singular) out += '*';
        }
        return out;
    }

    // rotation- and relabel-independent serialization
    std::string canonical() const {
        const int L = length();
        if (L == 0) return "";
        std::string best;
        for (int r = 0; r < L; ++r) {
            std::map<int, int> relabel;
            std::string s;
            for (int i = 0; i < L; ++i) {
                const Endpoint& e = seq_[(r + i) % L];
                auto [it, fresh] = relabel.emplace(e.label, static_cast<int>(relabel.size()) + 1);
                const Arrow& a = arrows_.at(e.label);
                s += e.head ? 'U' : 'O';
                s += std::to_string(it->second);
                s += a.sign > 0 ? '+' : '-';
                if (a.singular) s += '*';
            }
            if (r == 0 || s < best) best = std::move(s);
        }
        return best;
    }

    bool operator==(const GaussDiagram& o) const {
        return seq_ == o.seq_ && sign_map() == o.sign_map() && singular_set() == o.singular_set();
    }

private:
    std::vector<Endpoint> seq_;
    std::map<int, Arrow> arrows_;
};

inline GaussDiagram parse_gauss_code(const std::string& text) {
    std::vector<Endpoint> seq;
    std::map<int, int> signs;
    std::map<int, int> role_count[2];
    std::map<int, int> star_count;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char ch = text[i];
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ch != 'O' && ch != 'U') throw parse_error("expected O or U", i);
        bool head = ch == 'U';
        ++i;
        if (i >= n || text[i] < '1' || text[i] > '9') throw parse_error("expected label", i);
        long label = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            label = label * 10 + (text[i] - '0');
            if (label > 1000000000) throw parse_error("label too large", start);
            ++i;
        }
        if (i >= n || (text[i] != '+' && text[i] != '-')) throw parse_error("expected sign", i);
        int sg = text[i] == '+' ? 1 : -1;
        ++i;
        if (i < n && text[i] == '*') {
            ++star_count[static_cast<int>(label)];
            ++i;
        }
        int l = static_cast<int>(label);
        auto it = signs.find(l);
        if (it != signs.end() && it->second != sg)
            throw parse_error("label " + std::to_string(l) + " signs disagree", start);
        signs[l] = sg;
        if (++role_count[head ? 1 : 0][l] > 1)
            throw parse_error("label " + std::to_string(l) + " has two " + (head ? "U" : "O") + " tokens", start);
        seq.push_back({l, head});
    }
    std::set<int> singular;
    for (auto& [l, s] : signs) {
        if (role_count[0][l] != 1 || role_count[1][l] != 1)
            throw parse_error("label " + std::to_string(l) + " must appear exactly twice", n);
        int st = star_count.count(l) ? star_count[l] : 0;
        if (st == 1) throw parse_error("label " + std::to_string(l) + " marked singular on one occurrence only", n);
        if (st == 2) singular.insert(l);
    }
    return GaussDiagram(std::move(seq), signs, singular);
}

inline bool canonical_equal(const GaussDiagram& a, const GaussDiagram& b) {
    return a.length() == b.length() && a.canonical() == b.canonical();
}

inline bool arrows_intersect(const GaussDiagram& d, int a, int b) {
    if (a == b) throw gauss_error("arrows_intersect needs two distinct arrows");
    const Arrow& x = d.arrow(a);
    const Arrow& y = d.arrow(b);
    const int L = d.length();
    return strictly_between(x.tail, y.tail, x.head, L) != strictly_between(x.tail, y.head, x.head, L);
}

inline std::vector<std::pair<int, int>> parallel_pairs(const GaussDiagram& d) {
    std::vector<std::pair<int, int>> out;
    auto ls = d.labels();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (!arrows_intersect(d, ls[i], ls[j])) out.emplace_back(ls[i], ls[j]);
    return out;
}

// Which way the private arc of a smoothed chord runs: tail->head (T) or head->tail (H).
enum class ArcKind { T, H };

// Result of smoothing two non-intersecting arrows p, q. components[0] is the private
// arc of p, components[2] the private arc of q, components[1] the middle region.
struct SmoothResult {
    int p = 0, q = 0;
    ArcKind kind_p = ArcKind::T, kind_q = ArcKind::T;
    std::array<std::vector<int>, 3> components;  // endpoint positions per component
    std::map<int, std::pair<int, int>> crossing_arcs;  // remaining arrow -> (tail comp, head comp)
    // chord endpoints bounding each private arc: positions strictly inside start -> end
    std::pair<int, int> span_p{}, span_q{};
};

namespace detail {
// private arc of x with respect to y: returns (start, end, kind); positions strictly inside
// the ccw arc start -> end belong to x's private region.
inline std::tuple<int, int, ArcKind> private_arc(const GaussDiagram& d, int x, int y) {
    const Arrow& ax = d.arrow(x);
    const Arrow& ay = d.arrow(y);
    if (strictly_between(ax.tail, ay.tail, ax.head, d.length()))
        return {ax.head, ax.tail, ArcKind::H};
    return {ax.tail, ax.head, ArcKind::T};
}
}  // namespace detail

inline SmoothResult smooth_pair(const GaussDiagram& d, int p, int q) {
    if (arrows_intersect(d, p, q)) throw gauss_error("smooth_pair needs a non-intersecting pair");
    SmoothResult r;
    r.p = p;
    r.q = q;
    const int L = d.length();
    auto [sp, ep, kp] = detail::private_arc(d, p, q);
    auto [sq, eq, kq] = detail::private_arc(d, q, p);
    r.kind_p = kp;
    r.kind_q = kq;
    r.span_p = {sp, ep};
    r.span_q = {sq, eq};
    auto region = [&](int pos) {
        if (strictly_between(sp, pos, ep, L)) return 0;
        if (strictly_between(sq, pos, eq, L)) return 2;
        return 1;
    };
    for (auto& [l, a] : d.arrows()) {
        if (l == p || l == q) continue;
        int rt = region(a.tail), rh = region(a.head);
        r.components[rt].push_back(a.tail);
        r.components[rh].push_back(a.head);
        r.crossing_arcs[l] = {rt, rh};
    }
    for (auto& c : r.components) std::sort(c.begin(), c.end());
    return r;
}

inline int writhe(const GaussDiagram& d) {
    if (d.has_singular()) throw gauss_error("writhe is undefined with singular arrows");
    int w = 0;
    for (auto& kv : d.arrows()) w += kv.second.sign;
    return w;
}

// Splice d2 (cut at b2) into d1 at gap b1; d2's labels are shifted past d1's.
inline GaussDiagram connect_sum(const GaussDiagram& d1, int b1, const GaussDiagram& d2, int b2) {
    if (b1 < 0 || b1 > d1.length() || b2 < 0 || b2 > d2.length())
        throw gauss_error("connect_sum splice position out of range");
    const int shift = d1.max_label();
    std::vector<Endpoint> seq(d1.sequence().begin(), d1.sequence().begin() + b1);
    const auto& s2 = d2.sequence();
    const int L2 = d2.length();
    for (int i = 0; i < L2; ++i) {
        Endpoint e = s2[(b2 + i) % L2];
        seq.push_back({e.label + shift, e.head});
    }
    seq.insert(seq.end(), d1.sequence().begin() + b1, d1.sequence().end());
    auto signs = d1.sign_map();
    auto sing = d1.singular_set();
    for (auto& [l, a] : d2.arrows()) {
        signs[l + shift] = a.sign;
        if (a.singular) sing.insert(l + shift);
    }
    return GaussDiagram(std::move(seq), signs, sing);
}

enum class Symmetry { inverse, mirror, switch_ };

inline GaussDiagram apply_symmetry(const GaussDiagram& d, Symmetry mode) {
    std::vector<Endpoint> seq = d.sequence();
    auto signs = d.sign_map();
    switch (mode) {
    case Symmetry::inverse:
        std::reverse(seq.begin(), seq.end());
        break;
    case Symmetry::mirror:
        for (auto& kv : signs) kv.second = -kv.second;
        break;
    case Symmetry::switch_:
        for (auto& e : seq) e.head = !e.head;
        for (auto& kv : signs) kv.second = -kv.second;
        break;
    }
    return GaussDiagram(std::move(seq), signs, d.singular_set());
}

enum class Virtualization { way, sign };

inline GaussDiagram virtualize(const GaussDiagram& d, int a, Virtualization kind) {
    d.arrow(a);
    std::vector<Endpoint> seq = d.sequence();
    auto signs = d.sign_map();
    if (kind == Virtualization::way) {
        for (auto& e : seq)
            if (e.label == a) e.head = !e.head;
    } else {
        signs[a] = -signs[a];
    }
    return GaussDiagram(std::move(seq), signs, d.singular_set());
}

// Bit 0 keeps the stored arrow as a positive crossing; bit 1 is the crossing change
// (direction reversed, sign negative). Bits follow singular_labels() order.
inline GaussDiagram resolve(const GaussDiagram& d, const std::vector<int>& sigma) {
    auto sing = d.singular_labels();
    if (sigma.size() != sing.size())
        throw gauss_error("resolution vector has " + std::to_string(sigma.size()) + " bits for " +
                          std::to_string(sing.size()) + " singular arrows");
    std::vector<Endpoint> seq = d.sequence();
    auto signs = d.sign_map();
    std::set<int> flip;
    for (std::size_t i = 0; i < sing.size(); ++i) {
        if (sigma[i] != 0 && sigma[i] != 1) throw gauss_error("resolution bits must be 0 or 1");
        signs[sing[i]] = sigma[i] ? -1 : 1;
        if (sigma[i]) flip.insert(sing[i]);
    }
    for (auto& e : seq)
        if (flip.count(e.label)) e.head = !e.head;
    return GaussDiagram(std::move(seq), signs);
}

inline GaussDiagram remove_arrows(const GaussDiagram& d, const std::set<int>& gone) {
    std::vector<Endpoint> seq;
    for (auto& e : d.sequence())
        if (!gone.count(e.label)) seq.push_back(e);
    auto signs = d.sign_map();
    auto sing = d.singular_set();
    for (int l : gone) {
        signs.erase(l);
        sing.erase(l);
    }
    return GaussDiagram(std::move(seq), signs, sing);
}

// Replace arrow `a` by n parallel co-oriented copies with the same sign: tails side by
// side, heads side by side in reverse order, so the copies are pairwise disjoint.
inline GaussDiagram stack_arrow(const GaussDiagram& d, int a, int n) {
    if (n < 0) throw gauss_error("stack size must be non-negative");
    const Arrow& arr = d.arrow(a);
    std::vector<int> labs;
    if (n > 0) labs.push_back(a);
    int next = d.max_label() + 1;
    for (int i = 1; i < n; ++i) labs.push_back(next++);
    std::vector<Endpoint> seq;
    for (auto& e : d.sequence()) {
        if (e.label != a) {
            seq.push_back(e);
            continue;
        }
        if (!e.head)
            for (int l : labs) seq.push_back({l, false});
        else
            for (auto it = labs.rbegin(); it != labs.rend(); ++it) seq.push_back({*it, true});
    }
    auto signs = d.sign_map();
    auto sing = d.singular_set();
    signs.erase(a);
    sing.erase(a);
    for (int l : labs) {
        signs[l] = arr.sign;
        if (arr.singular) sing.insert(l);
    }
    return GaussDiagram(std::move(seq), signs, sing);
}

}  // namespace gaussloop

#endif
