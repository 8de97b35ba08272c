#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussloop/gauss_core.hpp"
#include "gaussloop/group_a.hpp"
#include "gaussloop/invariants.hpp"
#include "gaussloop/reidemeister.hpp"
#include "gaussloop/surface.hpp"
#include "gaussloop/weights.hpp"

using namespace gaussloop;
using nlohmann::ordered_json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invariant {
    enum Kind { phi, phifr, phigen } kind = phi;
    int i = 0, j = 0, k = 0;
    std::string name() const {
        if (kind == phifr) return "phifr";
        if (kind == phigen) return "phigen";
        return "phi:" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    }
};

std::array<int, 3> parse_triple(const std::string& s) {
    std::array<int, 3> t{};
    std::istringstream in(s);
    std::string part;
    int n = 0;
    while (std::getline(in, part, ',')) {
        if (n == 3) throw usage_error("expected three indices: " + s);
        try {
            std::size_t used = 0;
            t[n++] = std::stoi(part, &used);
            if (used != part.size()) throw usage_error("bad index: " + part);
        } catch (const std::logic_error&) {
            throw usage_error("bad index: " + part);
        }
    }
    if (n != 3) throw usage_error("expected three indices: " + s);
    if (t[0] < 0 || t[1] < 0 || t[2] < 0 || t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw usage_error("indices must be distinct and non-negative: " + s);
    return t;
}

Invariant parse_invariant(const std::string& s) {
    if (s == "phifr") return {Invariant::phifr};
    if (s == "phigen") return {Invariant::phigen};
    if (s.rfind("phi:", 0) == 0) {
        auto t = parse_triple(s.substr(4));
        return {Invariant::phi, t[0], t[1], t[2]};
    }
    throw usage_error("unknown invariant: " + s);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw usage_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> diagram_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        out.push_back({n, line});
    }
    return out;
}

GaussDiagram parse_line(const Line& l) {
    try {
        return parse_gauss_code(l.text);
    } catch (const parse_error& e) {
        throw usage_error("line " + std::to_string(l.number) + ", column " + std::to_string(e.position + 1) + ": " +
                          e.what());
    } catch (const gauss_error& e) {
        throw usage_error("line " + std::to_string(l.number) + ": " + e.what());
    }
}

ordered_json a_json(const AElement& x) { return x.coords(); }

ordered_json acomb_json(const ACombination& x) {
    ordered_json arr = ordered_json::array();
    for (auto& [k, v] : x.terms()) arr.push_back({{"config", "TH"}, {"labels", {k[0], k[1], k[2]}}, {"coeff", v}});
    return arr;
}

ordered_json asigma_json(const ASigmaCombination& x) {
    ordered_json arr = ordered_json::array();
    for (auto& [k, v] : x.terms()) arr.push_back({{"config", "TH"}, {"classes", {k[0], k[1], k[2]}}, {"coeff", v}});
    return arr;
}

ordered_json evaluate(const Invariant& inv, const GaussDiagram& d) {
    switch (inv.kind) {
    case Invariant::phi: return phi_ijk(d, inv.i, inv.j, inv.k);
    case Invariant::phifr: return a_json(phi_fr(d));
    case Invariant::phigen: return acomb_json(phi_general(d));
    }
    return nullptr;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("GAUSSLOOP_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::logic_error&) {
            throw usage_error("GAUSSLOOP_SEED is not an integer");
        }
    }
    return 1;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaussloop: loop invariants of virtual knots from Gauss diagrams"};
    app.require_subcommand(1);

    std::string input;

    auto* compute = app.add_subcommand("compute", "evaluate invariants, one diagram per input line");
    std::vector<std::string> phi_opts;
    bool want_phifr = false, want_phigen = false, want_weights = false, want_writhe = false;
    compute->add_option("--phi", phi_opts, "phi_{i,j,k} as i,j,k (repeatable)")->allow_extra_args(false);
    compute->add_flag("--phifr", want_phifr, "framed invariant in A");
    compute->add_flag("--phigen", want_phigen, "phi in its reduced normal form");
    compute->add_flag("--weights", want_weights, "crossing weights");
    compute->add_flag("--writhe", want_writhe, "writhe");
    compute->add_option("input", input, "file with Gauss codes (default stdin)");

    auto* verify = app.add_subcommand("verify", "check invariance along seeded random move sequences");
    std::string inv_name;
    int moves = 200, walks = 1;
    std::uint64_t seed = 0;
    bool frame_preserving = false, parity_aware = false;
    verify->add_option("--invariant", inv_name, "phi:i,j,k | phifr | phigen")->required();
    verify->add_option("--moves", moves, "moves per walk")->check(CLI::NonNegativeNumber);
    verify->add_option("--walks", walks, "walks per diagram")->check(CLI::PositiveNumber);
    auto* seed_opt = verify->add_option("--seed", seed, "RNG seed (default: GAUSSLOOP_SEED or 1)");
    verify->add_flag("--frame-preserving", frame_preserving, "no R1 moves");
    verify->add_flag("--parity-aware", parity_aware,
                     "for phifr, compare odd-R1 walks through the writhe-parity correction");
    verify->add_option("input", input, "file with Gauss codes (default stdin)");

    auto* symmetry = app.add_subcommand("symmetry", "phifr under inverse, mirror and switch");
    symmetry->add_option("input", input, "file with Gauss codes (default stdin)");

    auto* ftype = app.add_subcommand("finite-type", "alternating sum over resolutions of singular arrows");
    std::string ft_inv;
    ftype->add_option("--invariant", ft_inv, "phi:i,j,k | phifr")->required();
    ftype->add_option("input", input, "file with singular Gauss codes (default stdin)");

    auto* surface = app.add_subcommand("surface", "homology-labeled diagram invariants");
    bool check_commute = false;
    std::vector<std::string> gv_opts;
    surface->add_flag("--check-commute", check_commute, "compare hat_phi_Sigma(phi_Sigma) with phi");
    surface->add_option("--gv", gv_opts, "gv functional for classes given as a1,b1,../..../.... (repeatable)")
        ->allow_extra_args(false);
    surface->add_option("input", input, "labeled diagram file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            std::vector<std::array<int, 3>> triples;
            for (auto& s : phi_opts) triples.push_back(parse_triple(s));
            if (triples.empty() && !want_phifr && !want_phigen && !want_weights && !want_writhe)
                throw usage_error("nothing to compute");
            for (auto& l : diagram_lines(read_input(input))) {
                GaussDiagram d = parse_line(l);
                ordered_json res;
                if (!triples.empty()) {
                    ordered_json phi;
                    for (auto& t : triples)
                        phi["(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
                            ")"] = phi_ijk(d, t[0], t[1], t[2]);
                    res["phi"] = phi;
                }
                if (want_phifr) res["phi_fr"] = a_json(phi_fr(d));
                if (want_phigen) res["phi_general"] = acomb_json(phi_general(d));
                if (want_weights) {
                    ordered_json w;
                    for (auto& [lab, v] : crossing_weights(d)) w[std::to_string(lab)] = v;
                    res["weights"] = w;
                }
                if (want_writhe) res["writhe"] = writhe(d);
                emit({{"input", d.canonical()}, {"results", res}, {"diagnostics", ordered_json::array()}});
            }
            return 0;
        }

        if (*verify) {
            Invariant inv = parse_invariant(inv_name);
            if (!*seed_opt) seed = default_seed();
            bool all_ok = true;
            for (auto& l : diagram_lines(read_input(input))) {
                GaussDiagram d = parse_line(l);
                ordered_json base = evaluate(inv, d);
                ordered_json diag = ordered_json::array();
                bool ok = true;
                for (int w = 0; w < walks && ok; ++w) {
                    std::uint64_t s = seed + static_cast<std::uint64_t>(w);
                    WalkResult r = random_walk(d, moves, s, frame_preserving);
                    ordered_json got;
                    if (inv.kind == Invariant::phifr && parity_aware && r.r1_moves % 2) {
                        // odd number of R1 moves flips writhe parity: compare through the correction
                        bool match = phi_fr(d) == writhe_correction(phi_fr(r.diagram), r.diagram);
                        got = match ? base : a_json(phi_fr(r.diagram));
                    } else {
                        got = evaluate(inv, r.diagram);
                    }
                    if (got != base) {
                        ok = false;
                        ordered_json transcript = ordered_json::array();
                        for (auto& m : r.moves) transcript.push_back(to_string(m));
                        diag.push_back({{"seed", s},
                                        {"start", d.code()},
                                        {"end", r.diagram.code()},
                                        {"expected", base},
                                        {"got", got},
                                        {"r1_moves", r.r1_moves},
                                        {"moves", transcript}});
                    }
                }
                all_ok = all_ok && ok;
                emit({{"input", d.canonical()},
                      {"results", {{"invariant", inv.name()}, {"value", base}, {"invariant_on_walks", ok}}},
                      {"diagnostics", diag}});
                std::cerr << l.text << ": " << (ok ? "invariant" : "VIOLATION") << "\n";
            }
            return all_ok ? 0 : 1;
        }

        if (*symmetry) {
            for (auto& l : diagram_lines(read_input(input))) {
                GaussDiagram d = parse_line(l);
                SymmetryReport r = symmetry_report(d);
                emit({{"input", d.canonical()},
                      {"results",
                       {{"phi_fr", a_json(r.phi_fr)},
                        {"image", a_json(r.reflected)},
                        {"detects_noninvertible", r.detects_noninvertible},
                        {"detects_chiral", r.detects_chiral},
                        {"detects_switch", r.detects_switch}}},
                      {"diagnostics", ordered_json::array()}});
            }
            return 0;
        }

        if (*ftype) {
            Invariant inv = parse_invariant(ft_inv);
            if (inv.kind == Invariant::phigen) throw usage_error("finite-type supports phi:i,j,k and phifr");
            for (auto& l : diagram_lines(read_input(input))) {
                GaussDiagram d = parse_line(l);
                ordered_json v;
                if (inv.kind == Invariant::phi)
                    v = finite_type_derivative([&](const GaussDiagram& x) { return phi_ijk(x, inv.i, inv.j, inv.k); }, d);
                else
                    v = a_json(finite_type_derivative([](const GaussDiagram& x) { return phi_fr(x); }, d));
                emit({{"input", d.canonical()},
                      {"results", {{"invariant", inv.name()}, {"derivative", v}}},
                      {"diagnostics", ordered_json::array()}});
            }
            return 0;
        }

        if (*surface) {
            LabeledSurfaceDiagram d;
            try {
                d = parse_labeled(read_input(input));
            } catch (const gauss_error& e) {
                throw usage_error(e.what());
            }
            ordered_json res;
            res["genus"] = d.genus;
            res["phi_Sigma"] = asigma_json(phi_Sigma(d));
            for (auto& g : gv_opts) {
                std::vector<HomologyClass> cls;
                std::istringstream in(g);
                std::string part;
                while (std::getline(in, part, '/')) {
                    HomologyClass c;
                    std::istringstream ps(part);
                    std::string x;
                    while (std::getline(ps, x, ',')) {
                        try {
                            c.push_back(std::stoi(x));
                        } catch (const std::logic_error&) {
                            throw usage_error("bad class coordinate: " + x);
                        }
                    }
                    cls.push_back(c);
                }
                if (cls.size() != 3) throw usage_error("--gv needs three classes separated by '/'");
                for (auto& c : cls)
                    if (static_cast<int>(c.size()) != 2 * d.genus) throw usage_error("class length must be 2*genus");
                try {
                    res["gv"][g] = gv_functional(phi_Sigma(d), cls[0], cls[1], cls[2]);
                } catch (const gauss_error& e) {
                    throw usage_error(e.what());
                }
            }
            bool ok = true;
            if (check_commute) {
                CommuteReport r = commuting_check(d);
                res["commutes"] = r.commutes;
                res["lhs"] = acomb_json(r.lhs);
                res["rhs"] = acomb_json(r.rhs);
                ok = r.commutes;
            }
            emit({{"input", d.base.canonical()}, {"results", res}, {"diagnostics", ordered_json::array()}});
            return ok ? 0 : 1;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gauss_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
