// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// All comparisons are exact (integers and group elements); no tolerances.

#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gaussloop/gauss_core.hpp"
#include "gaussloop/group_a.hpp"
#include "gaussloop/invariants.hpp"
#include "gaussloop/reidemeister.hpp"
#include "gaussloop/surface.hpp"
#include "gaussloop/weights.hpp"
#include "test_support.hpp"
#include "torus_oracle.hpp"

using namespace gaussloop;
using testsupport::load;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 8) notes.push_back(what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::vector<std::array<int, 3>> triples(int hi, bool nonzero = false) {
    std::vector<std::array<int, 3>> out;
    for (int i = nonzero; i <= hi; ++i)
        for (int j = nonzero; j <= hi; ++j)
            for (int k = nonzero; k <= hi; ++k)
                if (i != j && j != k && i != k) out.push_back({i, j, k});
    return out;
}

std::string transcript(const GaussDiagram& start, std::uint64_t seed, bool frame, const WalkResult& w) {
    std::string s = "replay: start=" + start.code() + " seed=" + std::to_string(seed) +
                    (frame ? " frame-preserving" : "") + " moves=[";
    for (std::size_t i = 0; i < w.moves.size(); ++i) s += (i ? "; " : "") + to_string(w.moves[i]);
    return s + "] end=" + w.diagram.code();
}

Check criterion1() {
    Check c;
    auto k = load("K_LOOP.gauss");
    c.expect(phi_ijk(k, 1, 0, 2) == 1, "phi_102(K_LOOP) != 1");
    c.expect(phi_ijk(k, 1, 2, 0) == 1, "phi_120(K_LOOP) != 1");
    c.expect(phi_ijk(k, 2, 0, 1) == 0, "phi_201(K_LOOP) != 0");
    const int want[3] = {1, 0, -1};
    const AElement want_fr[3] = {generator(-2, 0), generator(0, 2), generator(0, 2)};
    for (int i = 0; i < 3; ++i) {
        auto d = load("D" + std::to_string(i + 1) + ".gauss");
        c.expect(phi_ijk(d, 2, 0, 3) == want[i], "phi_203(D" + std::to_string(i + 1) + ")");
        c.expect(phi_fr(d) == want_fr[i], "phi_fr(D" + std::to_string(i + 1) + ") = " + phi_fr(d).str());
    }
    c.expect(phi_fr(load("VT.gauss")).is_identity(), "phi_fr(VT) != 1");
    for (int n = 2; n <= 6; ++n) {
        auto d = load("O" + std::to_string(n) + ".gauss");
        AElement want_on = n % 2 ? generator(0, -2) : generator(0, n);
        c.expect(phi_fr(d) == want_on, "phi_fr(O" + std::to_string(n) + ") = " + phi_fr(d).str());
        c.expect(crossing_weight(d, 1) == n && crossing_weight(d, 2) == 0 && crossing_weight(d, 3) == -2 &&
                     crossing_weight(d, 4) == 1,
                 "O(" + std::to_string(n) + ") weights");
    }
    auto kp = load("K_PRIME.gauss");
    c.expect(phi_fr(kp) == generator(1, 7) * generator(-3, -5), "phi_fr(K_PRIME) = " + phi_fr(kp).str());
    return c;
}

Check criterion2() {
    Check c;
    c.expect(generator(-2, 1) == AElement{-2, -1, 0}, "f(A_{-2,1})");
    c.expect(generator(-2, 3) * generator(1, 2) == AElement{-2, -1, 0, 2}, "f(A_{-2,3}A_{1,2})");
    for (int i = -5; i <= 5; ++i) {
        c.expect(generator(i, i).is_identity(), "A_ii");
        for (int j = -5; j <= 5; ++j) {
            c.expect((generator(i, j) * generator(i, j)).is_identity(), "A_ij^2");
            c.expect(generator(i, j) == generator(j, i), "A_ij = A_ji");
            for (int k = -5; k <= 5; ++k) {
                c.expect(generator(i, j) * generator(j, k) == generator(i, k), "A_ij A_jk = A_ik");
                for (int l = -5; l <= 5; ++l)
                    c.expect(generator(i, j) * generator(k, l) == generator(k, l) * generator(i, j), "commute");
            }
        }
    }
    return c;
}

Check criterion3() {
    Check c;
    const int walks = 1000, steps = 200;
    const auto probe = std::vector<std::array<int, 3>>{{1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 0, 3}, {0, 1, 2}};
    auto fixtures = testsupport::all_fixtures();
    std::vector<std::future<Check>> jobs;
    for (auto& [name, d0] : fixtures) {
        jobs.push_back(std::async(std::launch::async, [&, name = name, d = d0]() {
            Check r;
            auto g = phi_general(d);
            auto f = phi_fr(d);
            std::vector<long> p;
            for (auto& t : probe) p.push_back(phi_ijk(d, t[0], t[1], t[2]));
            for (int w = 0; w < walks; ++w) {
                std::uint64_t seed = 1000003ull * (w + 1);
                bool frame = w % 2 == 1;
                auto res = random_walk(d, steps, seed, frame);
                auto raw = phi_general_raw(res.diagram);
                bool bad = normal_form_A(raw) != g;
                for (std::size_t t = 0; t < probe.size(); ++t)
                    bad = bad || pair_F(raw, probe[t][0], probe[t][1], probe[t][2]) != p[t];
                if (res.r1_moves % 2 == 0) bad = bad || phi_fr(res.diagram) != f;
                else bad = bad || writhe_correction(phi_fr(res.diagram), res.diagram) != f;
                r.expect(!bad, name + " " + transcript(d, seed, frame, res));
            }
            return r;
        }));
    }
    for (auto& j : jobs) {
        Check r = j.get();
        c.ok = c.ok && r.ok;
        for (auto& n : r.notes) c.note(n);
    }
    c.note(std::to_string(fixtures.size()) + " fixtures x " + std::to_string(walks) + " walks x " +
           std::to_string(steps) + " moves");
    return c;
}

Check criterion4() {
    Check c;
    std::mt19937_64 rng(404);
    auto tr = triples(4);
    for (int t = 0; t < 500; ++t) {
        auto d = testsupport::random_diagram(rng, 3 + static_cast<int>(rng() % 6), 3);
        for (auto& [i, j, k] : tr) {
            long v = finite_type_derivative([&](const GaussDiagram& x) { return phi_ijk(x, i, j, k); }, d);
            c.expect(v == 0, "phi derivative nonzero on " + d.code());
        }
    }
    for (int t = 0; t < 500; ++t) {
        auto d = testsupport::random_diagram(rng, 2 + static_cast<int>(rng() % 7), 2);
        auto v = finite_type_derivative([](const GaussDiagram& x) { return phi_fr(x); }, d);
        c.expect(v.is_identity(), "phi_fr derivative " + v.str() + " on " + d.code());
    }
    auto ft2 = load("FT2.gauss");
    c.expect(finite_type_derivative([](const GaussDiagram& x) { return phi_ijk(x, 1, 2, 3); }, ft2) == 1, "FT2 != 1");
    auto ft1 = testsupport::load_all("FT1.gauss");
    int i = 1;
    for (auto& d : ft1) {
        auto v = finite_type_derivative([](const GaussDiagram& x) { return phi_fr(x); }, d);
        c.expect(v == generator(-i, i), "FT1 i=" + std::to_string(i) + " gives " + v.str());
        i += 2;
    }
    c.expect(ft1.size() == 3, "FT1 fixture count");
    return c;
}

Check criterion5() {
    Check c;
    std::vector<GaussDiagram> ds;
    for (auto& [n, d] : testsupport::all_fixtures()) ds.push_back(d);
    std::mt19937_64 rng(505);
    for (int t = 0; t < 200; ++t) ds.push_back(testsupport::random_diagram(rng, 1 + static_cast<int>(rng() % 7)));
    auto tr = triples(5);
    for (auto& d : ds) {
        auto g = phi_general(d);
        for (auto& [i, j, k] : tr) c.expect(functional_phi_hat(g, i, j, k) == phi_ijk(d, i, j, k), "factorization " + d.code());
    }

    auto nz = triples(4, true);
    const std::pair<const char*, const char*> sum_pairs[] = {{"K_LOOP", "D1"}, {"K_LOOP", "K_LOOP"}, {"SEC43", "D3"}};
    for (auto [a, b] : sum_pairs) {
        auto d1 = load(std::string(a) + ".gauss"), d2 = load(std::string(b) + ".gauss");
        for (int b1 = 0; b1 <= d1.length(); ++b1)
            for (int b2 = 0; b2 <= d2.length(); ++b2) {
                auto s = connect_sum(d1, b1, d2, b2);
                for (auto& [i, j, k] : nz)
                    c.expect(phi_ijk(s, i, j, k) == phi_ijk(d1, i, j, k) + phi_ijk(d2, i, j, k),
                             std::string("additivity ") + a + "#" + b + " at " + std::to_string(b1) + "," +
                                 std::to_string(b2));
            }
    }

    // arrow counts: VT 2, O2 6 (even); K_LOOP 5, K_PRIME 11 (odd)
    const std::pair<const char*, const char*> parity_pairs[] = {
        {"VT", "O2"}, {"O2", "K_LOOP"}, {"K_LOOP", "O2"}, {"K_LOOP", "K_PRIME"}, {"D1", "TREFOIL"}};
    int cases[4] = {0, 0, 0, 0};
    for (auto [a, b] : parity_pairs) {
        auto d1 = load(std::string(a) + ".gauss"), d2 = load(std::string(b) + ".gauss");
        cases[(d1.size() % 2) * 2 + d2.size() % 2]++;
        auto want = connect_ratio_expected(d1, d2);
        for (int b1 = 0; b1 <= d1.length(); ++b1)
            for (int b2 = 0; b2 <= d2.length(); ++b2)
                c.expect(phi_fr_connect_ratio(d1, d2, b1, b2) == want,
                         std::string("phi_fr ratio ") + a + "#" + b);
    }
    c.expect(cases[0] && cases[1] && cases[2] && cases[3], "parity cases not all covered");
    return c;
}

Check criterion6() {
    Check c;
    auto tr = triples(4);
    for (auto& [name, d] : testsupport::all_fixtures()) {
        for (auto m : {Symmetry::inverse, Symmetry::mirror, Symmetry::switch_}) {
            auto e = apply_symmetry(d, m);
            const char* mn = m == Symmetry::inverse ? "inverse" : m == Symmetry::mirror ? "mirror" : "switch";
            for (auto& [i, j, k] : tr) {
                long a = phi_ijk(d, i, j, k), b = phi_ijk(e, i, j, k);
                c.expect(a == b, "phi_" + std::to_string(i) + std::to_string(j) + std::to_string(k) + "(" + name +
                                     ")=" + std::to_string(a) + " but " + mn + " gives " + std::to_string(b));
            }
        }
        c.expect(support_parity(phi_fr(d)) == Parity::even, "paper Proposition falsified: odd support on " + name);
    }
    std::mt19937_64 rng(606);
    for (int t = 0; t < 1000; ++t) {
        auto d = testsupport::random_diagram(rng, 1 + static_cast<int>(rng() % 9));
        c.expect(support_parity(phi_fr(d)) == Parity::even, "paper Proposition falsified: odd support on " + d.code());
    }
    auto r = symmetry_report(load("SEC43.gauss"));
    c.expect(r.detects_noninvertible && r.detects_chiral && r.detects_switch, "SEC43 flags");
    return c;
}

Check criterion7() {
    Check c;
    std::mt19937_64 rng(707);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto rels = relation_instances_A(6);
    for (auto& r : rels) {
        c.expect(normal_form_A(r).is_zero(), "A relation survives");
        for (int t = 0; t < 100; ++t) c.expect(normal_form_A(r, pick).is_zero(), "A normal form order-dependent");
        std::set<int> labs;
        for (auto& [g, v] : r) labs.insert({g.x, g.y, g.z});
        for (int i : labs)
            for (int j : labs)
                for (int k : labs)
                    if (i != j && j != k && i != k) c.expect(pair_F(r, i, j, k) == 0, "phi-hat on a relation");
    }
    long n_sigma = 0;
    auto sigma_check = [&](const RawASigma& r, bool orders) {
        ++n_sigma;
        c.expect(normal_form_ASigma(r).is_zero(), "A(Sigma) relation survives");
        if (orders)
            for (int t = 0; t < 100; ++t) c.expect(normal_form_ASigma(r, pick).is_zero(), "A(Sigma) order-dependent");
        c.expect(hat_phi_Sigma(r).is_zero(), "hat map sends a relation outside R");
        std::set<HomologyClass> cls;
        for (auto& [g, v] : r) cls.insert({g.a, g.b, g.c});
        for (auto& a : cls)
            for (auto& b : cls)
                for (auto& cc : cls) {
                    if (is_zero_class(a) || is_zero_class(b) || is_zero_class(cc)) continue;
                    if (!((a != b && b != cc && a != cc) || (a == cc && b != cc))) continue;
                    c.expect(gv_functional(r, a, b, cc) == 0, "gv functional on a relation");
                }
    };
    for_each_relation_ASigma(1, -2, 2, [&](const RawASigma& r) { sigma_check(r, true); });
    for_each_relation_ASigma(2, -1, 1, [&](const RawASigma& r) { sigma_check(r, false); });
    // 100 random rewrite orders on a deterministic sample of genus-2 instances
    long k = 0;
    for_each_relation_ASigma(2, -1, 1, [&](const RawASigma& r) {
        if (k++ % 997) return;
        for (int t = 0; t < 100; ++t) c.expect(normal_form_ASigma(r, pick).is_zero(), "A(Sigma) order-dependent");
    });
    c.note(std::to_string(rels.size()) + " A instances, " + std::to_string(n_sigma) + " A(Sigma) instances");
    return c;
}

Check criterion8() {
    Check c;
    auto g1 = testsupport::load_labeled("REALIZED_G1.lgauss");
    auto r = commuting_check(g1);
    c.expect(r.commutes, "REALIZED_G1: " + r.lhs.str() + " vs " + r.rhs.str());
    c.expect(!r.lhs.is_zero(), "REALIZED_G1 trivial");
    for (const char* n : {"FIGURE_EIGHT", "TREFOIL"})
        for (int genus : {1, 2}) {
            auto z = commuting_check(zero_labeled(load(std::string(n) + ".gauss"), genus));
            c.expect(z.commutes && z.lhs.is_zero(), std::string(n) + " zero-labeled");
        }
    auto bad = g1;
    bad.arcs[2] = {1, 0};
    auto neg = commuting_check(bad);
    c.note(std::string("negative control (arc 2 relabeled (1,0)): commutes=") + (neg.commutes ? "true" : "false"));
    std::mt19937_64 rng(808);
    int realized = 0;
    while (realized < 300) {
        auto pts = torus::random_curve(rng, 3 + static_cast<int>(rng() % 4), static_cast<int>(rng() % 5) - 2,
                                       static_cast<int>(rng() % 5) - 2);
        auto d = torus::curve_diagram(pts, rng);
        if (d.base.empty() || d.base.size() > 12) continue;
        ++realized;
        c.expect(commuting_check(d).commutes, "torus curve " + d.base.code());
    }
    c.note(std::to_string(realized) + " random torus curves");
    return c;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* title;
        Check (*fn)();
    };
    const Item items[] = {
        {1, "paper-value regression", criterion1},
        {2, "group A identities", criterion2},
        {3, "invariance fuzzing", criterion3},
        {4, "finite-type", criterion4},
        {5, "factorization and connected sum", criterion5},
        {6, "symmetry suite", criterion6},
        {7, "A / A(Sigma) well-definedness", criterion7},
        {8, "analogue commuting square", criterion8},
    };
    bool all = true;
    for (auto& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = it.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        std::cout << "CRITERION " << it.id << " " << (c.ok ? "PASS" : "FAIL") << "  " << it.title << " (" << buf << ")\n";
        for (auto& n : c.notes) std::cout << "    " << n << "\n";
        all = all && c.ok;
    }
    return all ? 0 : 1;
}
