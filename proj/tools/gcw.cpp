// Command-line workbench.  JSON on stdout; exit 0 ok, 1 check failure,
// 2 usage error, 3 runtime or resource error.
#include <iostream>

#include "CLI11.hpp"
#include "gcw/suites.hpp"

using namespace gcw;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a canonical text key or a JSON term / array of terms
GVec parse_vector(const std::string& s) {
    if (s.empty()) return {};
    if (s[0] == '[' || s[0] == '{' || s[0] == '"') return GVec::from_json(json::parse(s));
    return GVec::from_json(json(s));
}

Graph parse_graph(const std::string& s) {
    GVec v = parse_vector(s);
    if (v.size() != 1) throw UsageError("expected a single graph");
    return v.begin()->first;
}

Mac preset_gauge(const std::string& name) {
    GVec k4 = GVec::single(g_k4());
    if (name == "k4") return Mac{{}, k4};
    if (name == "s-k4") return splitting_s(k4);
    if (name == "shat-k4") return splitting_s_hat(k4).value;
    throw UsageError("unknown gauge preset: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph complexes, deformation complexes and their representations"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "key=value file for caps and seeds (flags override)");
    int max_vertices = 9, max_edges = 24, hbar_order = 3;
    long long samples = 1000000;
    uint64_t seed = 1;
    bool pretty = false;
    app.add_option("--max-vertices", max_vertices, "vertex cap")->check(CLI::Range(1, 16));
    app.add_option("--max-edges", max_edges, "edge cap")->check(CLI::Range(0, 64));
    app.add_option("--hbar-order", hbar_order, "truncation order in hbar")->check(CLI::Range(1, 8));
    app.add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed");
    app.add_flag("--pretty", pretty, "indented JSON");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "list canonical graphs of one bigrade");
    std::string colour = "one";
    int vertices = 0, edges = 0, whites = 1;
    bool gc2 = false, trivalent = false, connected = false, no_black_component = false, keys = false;
    en->add_option("--colour", colour, "one | two")->check(CLI::IsMember({"one", "two"}));
    en->add_option("--vertices", vertices, "total vertex count")->required();
    en->add_option("--edges", edges, "edge count")->required();
    en->add_option("--whites", whites, "white vertices (two colours)");
    en->add_flag("--gc2", gc2, "connected, at least trivalent");
    en->add_flag("--trivalent", trivalent, "black vertices at least trivalent");
    en->add_flag("--connected", connected, "connected graphs only");
    en->add_flag("--no-black-component", no_black_component, "every component meets a white vertex");
    en->add_flag("--keys", keys, "list the keys");

    // delta / bracket
    auto* de = app.add_subcommand("delta", "apply a differential");
    auto* br = app.add_subcommand("bracket", "Lie bracket of two elements");
    std::string cx_name = "gc2", x_def, x_gc, y_def, y_gc;
    for (auto* s : {de, br}) {
        s->add_option("--complex", cx_name, "fgc2 | gc2 | def_ass_fgraphs | def_ass_graphs | mac | ...");
        s->add_option("--def", x_def, "Def part (key or JSON terms)");
        s->add_option("--gc", x_gc, "graph-complex part (key or JSON terms)");
    }
    br->add_option("--def2", y_def, "second element, Def part");
    br->add_option("--gc2", y_gc, "second element, graph-complex part");

    // cohomology
    auto* co = app.add_subcommand("cohomology", "cohomology ranks of a named complex");
    int degree = 0;
    co->add_option("--complex", cx_name, "complex name")->required();
    co->add_option("--degree", degree, "degree")->required();

    // verify
    auto* ve = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    ve->add_option("suite", suite, "suite id or all")->required();

    // weight
    auto* we = app.add_subcommand("weight", "Monte Carlo weight of a two-colour graph");
    std::string graph_s, gauge_s = "first-two";
    we->add_option("--graph", graph_s, "graph key or JSON term")->required();
    we->add_option("--gauge", gauge_s, "first-two | first-last");

    // represent
    auto* re = app.add_subcommand("represent", "evaluate a graph on polyvector fields");
    int dim = 2;
    std::vector<std::string> args;
    std::string pi_s;
    re->add_option("--graph", graph_s, "graph key or JSON terms")->required();
    re->add_option("--dim", dim, "dimension")->check(CLI::Range(1, kMaxDim));
    re->add_option("--arg", args, "argument polyvector, one per vertex, in vertex order");
    re->add_option("--pi", pi_s, "bivector fed to black vertices (hbar expansion of a Def element)");

    // gauge
    auto* ga = app.add_subcommand("gauge", "gauge transform of (Gamma0, edge)");
    std::string preset;
    int truncation = 6;
    ga->add_option("--preset", preset, "k4 | s-k4 | shat-k4");
    ga->add_option("--def", x_def, "gauge element, Def part");
    ga->add_option("--gc", x_gc, "gauge element, graph-complex part");
    ga->add_option("--truncation", truncation, "vertex truncation");

    // project
    auto* pr = app.add_subcommand("project", "reduce modulo an edge ideal");
    std::string element, ideal_s = "ibb-prime";
    pr->add_option("--element", element, "key or JSON terms")->required();
    pr->add_option("--ideal", ideal_s, "ibb | ibb-prime")->check(CLI::IsMember({"ibb", "ibb-prime"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }

    Limits lim{max_vertices, max_edges};
    auto emit = [&](const json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; };
    try {
        if (*en) {
            json out;
            std::vector<Graph> gs;
            if (colour == "one") {
                Constraints c{trivalent || gc2, connected || gc2, false};
                gs = enumerate(Kind::One, 0, vertices, edges, c, lim);
                if (gc2) gs.erase(std::remove_if(gs.begin(), gs.end(), [](auto& g) { return !(g.n >= 1); }), gs.end());
            } else {
                if (whites < 1 || whites > vertices) throw UsageError("need 1 <= whites <= vertices");
                Constraints c{trivalent, connected, no_black_component};
                gs = enumerate(Kind::TwoOrdered, whites, vertices - whites, edges, c, lim);
            }
            out["count"] = gs.size();
            if (keys) {
                out["graphs"] = json::array();
                for (auto& g : gs) out["graphs"].push_back(to_key(g));
            }
            emit(out);
        } else if (*de || *br) {
            Cx cx = complex_from_name(cx_name);
            Mac x{parse_vector(x_def), parse_vector(x_gc)};
            if (*de) {
                Mac r;
                switch (cx) {
                    case Cx::FGC2:
                    case Cx::GC2: r.gc = delta_bb(x.gc); break;
                    case Cx::DefFGraphs:
                    case Cx::DefGraphs:
                    case Cx::DefGraphsQuot: r.def = delta_def(x.def); break;
                    default: r = mac_differential(x);
                }
                emit({{"complex", complex_name(cx)}, {"value", r.to_json()}});
            } else {
                Mac y{parse_vector(y_def), parse_vector(y_gc)};
                Mac r;
                switch (cx) {
                    case Cx::FGC2:
                    case Cx::GC2: r.gc = gc_bracket(x.gc, y.gc); break;
                    case Cx::DefFGraphs:
                    case Cx::DefGraphs:
                    case Cx::DefGraphsQuot: r.def = def_bracket(x.def, y.def); break;
                    default: r = mac_bracket(x, y);
                }
                emit({{"complex", complex_name(cx)}, {"value", r.to_json()}});
            }
        } else if (*co) {
            Cx cx = complex_from_name(cx_name);
            json t = json::array();
            int total = 0;
            for (auto& s : cohomology_table(cx, degree, max_vertices, lim)) {
                t.push_back({{"vertices", s.vertices}, {"dim", s.dim}, {"rank_out", s.rank_out},
                             {"rank_in", s.rank_in}, {"h", s.h}});
                total += s.h;
            }
            emit({{"complex", complex_name(cx)}, {"degree", degree}, {"max_vertices", max_vertices},
                  {"sectors", t}, {"dim", total}});
        } else if (*ve) {
            SuiteOptions o{lim, hbar_order, samples, seed};
            std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
            auto known = suite_ids();
            for (auto& id : ids)
                if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown suite: " + id);
            json out = json::array();
            bool ok = true;
            for (auto& id : ids) {
                auto r = run_suite(id, o);
                std::cerr << id << ": " << (r.ok() ? "pass" : "fail") << " (" << r.seconds << " s)\n";
                ok = ok && r.ok();
                out.push_back(r.to_json());
            }
            emit(ids.size() == 1 ? out[0] : out);
            return ok ? 0 : 1;
        } else if (*we) {
            WeightOptions w;
            w.samples = samples;
            w.seed = seed;
            w.gauge = gauge_from_name(gauge_s);
            Graph g = parse_graph(graph_s);
            emit(weight(g, w).to_json());
        } else if (*re) {
            GVec v = parse_vector(graph_s);
            std::vector<Polyvector> xs;
            for (auto& a : args) xs.push_back(Polyvector::parse(dim, a));
            if (pi_s.empty()) {
                emit({{"value", phi(v, xs).str()}});
            } else {
                TwistedAss t = twist_by_poisson(v, Polyvector::parse(dim, pi_s), hbar_order);
                Series s = t.mu(int(xs.size()), xs);
                json c = json::array();
                for (auto& p : s.c) c.push_back(p.str());
                emit({{"hbar_coefficients", c}});
            }
        } else if (*ga) {
            Mac h = preset.empty() ? Mac{parse_vector(x_def), parse_vector(x_gc)} : preset_gauge(preset);
            Mac g = gauge_transform(mac_gamma0(), h, truncation);
            Mac res = mc_residual(g).truncated(truncation);
            emit({{"truncation", truncation}, {"value", g.to_json()}, {"residual", res.to_json()},
                  {"residual_vanishes", res.empty()}});
        } else if (*pr) {
            GVec x = parse_vector(element);
            auto p = quotient_project(x, ideal_s == "ibb" ? Ideal::Ibb : Ideal::IbbPrime, lim);
            emit({{"representative", p.representative.to_json()}, {"member", p.member}});
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PolyError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
