#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "polycross/feasibility.hpp"
#include "polycross/render.hpp"
#include "polycross/search.hpp"

using namespace polycross;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

// Explicit path wins; otherwise POLYCROSS_OUT/<name> when the variable is set.
std::string out_path(const std::string& given, const std::string& name) {
    if (!given.empty()) return given;
    if (const char* dir = std::getenv("POLYCROSS_OUT"); dir && *dir) return (fs::path(dir) / name).string();
    return {};
}

Rat parse_h(const std::string& s) {
    try {
        return s.find('.') != std::string::npos ? rat_from_decimal(s) : parse_rat(s);
    } catch (const std::exception&) {
        throw UsageError("bad rational '" + s + "'");
    }
}

std::string ranges(const std::vector<int>& xs) {
    if (xs.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        while (j + 1 < xs.size() && xs[j + 1] == xs[j] + 1) ++j;
        if (!out.empty()) out += ", ";
        out += std::to_string(xs[i]);
        if (j >= i + 2) out += ".." + std::to_string(xs[j]);
        else if (j == i + 1) out += ", " + std::to_string(xs[j]);
        i = j + 1;
    }
    return out;
}

std::string counts(const IntersectionProfile& prof) {
    std::string s;
    for (int c : prof.per_edge) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

RenderSpec render_spec(int size, bool labels) {
    RenderSpec r;
    r.width = r.height = size;
    r.labels = labels;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed polylines whose edges are all crossed equally often"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a polyline, verify it, write JSON/SVG");
    construct->require_subcommand(1);
    std::string c_out, c_svg;
    bool c_labels = false;
    int c_size = 640;
    construct->add_option("-o,--output", c_out, "polyline JSON path");
    construct->add_option("--svg", c_svg, "SVG path");
    construct->add_flag("--labels", c_labels, "label edges with crossing counts in the SVG");
    construct->add_option("--size", c_size, "SVG canvas size in pixels")->check(CLI::PositiveNumber);
    construct->fallthrough();

    std::function<Polyline()> build;
    std::string build_name;
    int a_n = 0, a_span = 0, a_k = 0, a_p = 0, a_q = 0, a_d = 0;
    std::string a_name, a_h = "", a_file, a_json, a_e1, a_e2;
    std::vector<int> a_steps;

    auto* c_star = construct->add_subcommand("star", "regular star polygon");
    c_star->add_option("--n", a_n)->required();
    c_star->add_option("--span", a_span)->required();
    c_star->callback([&] {
        build = [&] { return star(a_n, a_span); };
        build_name = "star_" + std::to_string(a_n) + "_" + std::to_string(a_span);
    });
    auto* c_fix = construct->add_subcommand("fixture", "catalogue fixture");
    c_fix->add_option("--name", a_name)->required();
    c_fix->callback([&] {
        build = [&] { return fixture(a_name); };
        build_name = a_name;
    });
    auto* c_comb = construct->add_subcommand("comb", "comb polyline of type <4k+4|2k>");
    c_comb->add_option("--k", a_k)->required();
    c_comb->callback([&] {
        build = [&] { return comb_construction(a_k); };
        build_name = "comb_" + std::to_string(a_k);
    });
    auto* c_pat = construct->add_subcommand("pattern", "additive step pattern on a regular n-gon");
    c_pat->add_option("--n", a_n)->required();
    c_pat->add_option("--steps", a_steps, "step sizes, e.g. 4,4,7")->required()->delimiter(',');
    c_pat->callback([&] {
        build = [&] { return additive_pattern(a_n, a_steps); };
        build_name = "pattern_" + std::to_string(a_n);
    });
    for (std::string kind : {"double", "neg"}) {
        auto* c = construct->add_subcommand(kind, kind == "double" ? "two concentric polygons, inner scaled by 1/h"
                                                                     : "two concentric polygons, inner scaled by -1/h");
        c->set_help_flag("--help", "print this help");  // frees -h for the ratio
        c->add_option("--n", a_n)->required();
        c->add_option("--p", a_p)->required();
        c->add_option("--q", a_q, "defaults to p");
        c->add_option("--h", a_h, "homothety ratio, p/q or decimal")->required();
        c->callback([&, kind] {
            Rat h = parse_h(a_h);
            int q = a_q > 0 ? a_q : a_p;
            if (kind == "double") build = [&, h, q] { return double_polygon(a_n, a_p, q, h); };
            else build = [&, h, q] { return neg_double_polygon(a_n, a_p, q, h); };
            build_name = kind + "_" + std::to_string(a_n) + "_" + std::to_string(a_p);
        });
    }
    auto* c_surg = construct->add_subcommand("surgery", "crossing surgery on a labelled fixture");
    c_surg->add_option("--fixture", a_name)->required();
    c_surg->add_option("--first", a_e1, "first edge as two vertex labels, e.g. BA")->required();
    c_surg->add_option("--second", a_e2, "second edge, e.g. DE")->required();
    c_surg->callback([&] {
        if (a_e1.size() != 2 || a_e2.size() != 2) throw UsageError("edges are given as two vertex labels");
        build = [&] {
            return crossing_surgery(fixture(a_name), fixture_edge(a_name, a_e1[0], a_e1[1]), fixture_edge(a_name, a_e2[0], a_e2[1]));
        };
        build_name = a_name + "_surgery";
    });
    auto* c_t2 = construct->add_subcommand("merge", "merge of main diagonals and a span collection, type <2k+d+3|k>");
    c_t2->add_option("--k", a_k)->required();
    c_t2->add_option("--d", a_d)->required();
    c_t2->callback([&] {
        build = [&] { return theorem2_merge(a_k, a_d); };
        build_name = "merge_" + std::to_string(a_k) + "_" + std::to_string(a_d);
    });
    auto* c_rec = construct->add_subcommand("recipe", "evaluate a recipe tree");
    auto* rf = c_rec->add_option("--file", a_file, "recipe JSON file");
    auto* rj = c_rec->add_option("--json", a_json, "recipe JSON text");
    rf->excludes(rj);
    c_rec->callback([&] {
        std::string text = a_file.empty() ? a_json : read_file(a_file);
        if (text.empty()) throw UsageError("recipe needs --file or --json");
        Recipe r;
        try {
            r = Recipe::from_json(nlohmann::json::parse(text));
        } catch (const std::exception& e) {
            throw UsageError(std::string("malformed recipe: ") + e.what());
        }
        build = [r] { return evaluate(r); };
        build_name = "recipe";
    });

    // verify
    auto* verify = app.add_subcommand("verify", "print the crossing profile of a polyline JSON file");
    std::string v_in;
    std::vector<int> v_expect;
    verify->add_option("input", v_in)->required();
    verify->add_option("--expect", v_expect, "expected n and k")->expected(2);

    // feasible
    auto* feas = app.add_subcommand("feasible", "decide whether <n|k> exists");
    std::vector<int> f_nk, f_tc;
    int f_tb = 0;
    bool f_witness = false, f_json = false;
    std::string f_out, f_svg;
    feas->add_option("nk", f_nk, "n k")->expected(2);
    auto* otc = feas->add_option("--table-C", f_tc, "k n_max: all n <= n_max with <n|k> feasible")->expected(2);
    auto* otb = feas->add_option("--table-B", f_tb, "n: all k with <n|k> feasible");
    otc->excludes(otb);
    feas->add_flag("--witness", f_witness, "evaluate and write the witness polyline");
    feas->add_flag("--json", f_json, "print the verdict as JSON");
    feas->add_option("-o,--output", f_out, "witness JSON path");
    feas->add_option("--svg", f_svg, "witness SVG path");

    // search
    auto* search = app.add_subcommand("search", "brute-force search over cyclic orders of point sets");
    int s_n = 0, s_k = 0, s_random = 0, s_width = 8, s_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::uint64_t s_seed = 1;
    bool s_convex = false;
    std::string s_db, s_out;
    search->add_option("n", s_n)->required();
    search->add_option("k", s_k)->required();
    auto* orand = search->add_option("--random", s_random, "number of random point sets")->check(CLI::PositiveNumber);
    search->add_option("--seed", s_seed);
    search->add_flag("--convex", s_convex, "sample sets in convex position");
    auto* odb = search->add_option("--db", s_db, "binary point-set database");
    search->add_option("--width", s_width, "database coordinate width in bits")->check(CLI::IsMember({8, 16}));
    search->add_option("--jobs", s_jobs)->check(CLI::PositiveNumber);
    search->add_option("-o,--output", s_out, "directory for witness JSON files");
    orand->excludes(odb);

    // render
    auto* render = app.add_subcommand("render", "render a polyline JSON file to SVG");
    std::string r_in, r_out;
    bool r_labels = false;
    int r_size = 640;
    render->add_option("input", r_in)->required();
    render->add_option("-o,--output", r_out);
    render->add_flag("--labels", r_labels);
    render->add_option("--size", r_size)->check(CLI::PositiveNumber);

    auto* fixtures = app.add_subcommand("fixtures", "list the fixture catalogue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) {
            Polyline L;
            try {
                L = build();
            } catch (const ConstructionError& e) {
                std::cerr << "construction failed: " << e.what() << "\n";
                return 1;
            }
            Classification c = classify(L);
            std::cout << c.describe() << "\n";
            if (!c.is_uniform()) {
                std::cerr << "construction failed: result is not uniform, nothing written\n";
                return 1;
            }
            if (auto p = out_path(c_out, build_name + ".json"); !p.empty()) {
                write_file(p, to_json(L, c.type) + "\n");
                std::cout << "wrote " << p << "\n";
            }
            if (!c_svg.empty()) {
                write_file(c_svg, render_svg(L, render_spec(c_size, c_labels)));
                std::cout << "wrote " << c_svg << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            Polyline L;
            try {
                L = from_json(read_file(v_in));
                if (L.size() < 3) throw std::invalid_argument("fewer than 3 vertices");
                intersection_profile(L);
            } catch (const std::invalid_argument& e) {
                std::cerr << "malformed polyline: " << e.what() << "\n";
                return 2;
            }
            Classification c = classify(L);
            std::cout << "vertices: " << L.size() << "\n";
            if (!c.profile.per_edge.empty()) std::cout << "per-edge crossings: " << counts(c.profile) << "\n";
            std::cout << "classification: " << c.describe() << "\n";
            if (v_expect.size() == 2) {
                VerifyReport r = verify_type(L, v_expect[0], v_expect[1]);
                std::cout << (r.pass ? "PASS " : "FAIL ") << type_string({v_expect[0], v_expect[1]});
                if (!r.pass) std::cout << ": " << r.message;
                std::cout << "\n";
                return r.pass ? 0 : 1;
            }
            return 0;
        }

        if (feas->parsed()) {
            int picked = !f_nk.empty() + !f_tc.empty() + (f_tb > 0);
            if (picked != 1) throw UsageError("give exactly one of: n k, --table-C k n_max, --table-B n");
            if (!f_nk.empty()) {
                int n = f_nk[0], k = f_nk[1];
                if (n < 3 || k < 0) throw UsageError("need n >= 3 and k >= 0");
                Verdict v = decide(n, k);
                if (f_json) std::cout << v.to_json().dump(2) << "\n";
                else std::cout << type_string({n, k}) << " " << v.describe() << "\n";
                if (f_witness || !f_out.empty() || !f_svg.empty()) {
                    if (!v.evaluable()) {
                        std::cerr << "no evaluable witness for " << type_string({n, k}) << "\n";
                        return 1;
                    }
                    Polyline L;
                    try {
                        L = witness(n, k);
                    } catch (const ConstructionError& e) {
                        std::cerr << "witness failed: " << e.what() << "\n";
                        return 1;
                    }
                    std::cout << "witness verified: " << classify(L).describe() << "\n";
                    std::string name = "witness_" + std::to_string(n) + "_" + std::to_string(k);
                    if (auto p = out_path(f_out, name + ".json"); !p.empty()) {
                        write_file(p, to_json(L, TypeNK{n, k}) + "\n");
                        std::cout << "wrote " << p << "\n";
                    }
                    if (!f_svg.empty()) {
                        write_file(f_svg, render_svg(L));
                        std::cout << "wrote " << f_svg << "\n";
                    }
                }
                return 0;
            }
            SetResult s;
            std::string title;
            if (!f_tc.empty()) {
                int k = f_tc[0], n_max = f_tc[1];
                if (k < 0 || n_max < 3) throw UsageError("need k >= 0 and n_max >= 3");
                s = compute_C(k, n_max);
                title = "C_" + std::to_string(k) + " (n <= " + std::to_string(n_max) + ")";
            } else {
                if (f_tb < 3) throw UsageError("need n >= 3");
                s = compute_B(f_tb);
                title = "B_" + std::to_string(f_tb);
            }
            std::cout << title << "\n";
            std::cout << "  feasible:   " << ranges(s.feasible) << "\n";
            std::cout << "  infeasible: " << ranges(s.infeasible) << "\n";
            std::cout << "  unknown:    " << ranges(s.unknown) << (s.unknown.empty() ? "" : "  [UNKNOWN]") << "\n";
            if (!s.claimed.empty()) std::cout << "  claimed without witness: " << ranges(s.claimed) << "\n";
            return 0;
        }

        if (search->parsed()) {
            if ((s_random > 0) == !s_db.empty()) throw UsageError("give exactly one of --random N or --db path");
            if (s_n < 3 || s_k < 0) throw UsageError("need n >= 3 and k >= 0");
            std::vector<PointSet> sets;
            if (s_random > 0) {
                sets = random_pointsets(s_n, s_random, s_seed, s_convex);
            } else {
                try {
                    sets = load_pointset_db(s_db, s_n, s_width);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "bad database: " << e.what() << "\n";
                    return 2;
                }
            }
            SearchReport rep = exhaustive_scan(s_n, s_k, sets, s_jobs);
            std::cout << rep.summary() << "\n";
            std::vector<bool> hit(sets.size(), false);
            for (const auto& w : rep.witnesses) hit[w.set_index] = true;
            std::size_t convex = 0, convex_hit = 0;
            for (std::size_t i = 0; i < sets.size(); ++i)
                if (in_convex_position(sets[i].points)) {
                    ++convex;
                    convex_hit += hit[i];
                }
            std::cout << "configurations in convex position: " << convex << " (" << convex_hit << " with a witness)\n";
            std::string dir = out_path(s_out, "search");
            for (std::size_t j = 0; j < rep.witnesses.size(); ++j) {
                const auto& w = rep.witnesses[j];
                std::cout << "witness " << j << ": " << sets[w.set_index].source << " order";
                for (int v : w.order) std::cout << " " << v;
                std::cout << (w.coincident ? " (coincident crossings)" : "") << "\n";
                if (!dir.empty()) {
                    auto p = (fs::path(dir) / ("witness_" + std::to_string(j) + ".json")).string();
                    write_file(p, to_json(order_polyline(sets[w.set_index], w.order), TypeNK{s_n, s_k}) + "\n");
                }
            }
            if (!dir.empty() && !rep.witnesses.empty()) std::cout << "wrote witnesses to " << dir << "\n";
            return 0;
        }

        if (render->parsed()) {
            Polyline L;
            try {
                L = from_json(read_file(r_in));
            } catch (const std::invalid_argument& e) {
                std::cerr << "malformed polyline: " << e.what() << "\n";
                return 2;
            }
            std::string svg = render_svg(L, render_spec(r_size, r_labels));
            if (auto p = out_path(r_out, fs::path(r_in).stem().string() + ".svg"); !p.empty()) {
                write_file(p, svg);
                std::cout << "wrote " << p << "\n";
            } else {
                std::cout << svg;
            }
            return 0;
        }

        if (fixtures->parsed()) {
            for (const auto& f : fixture_catalogue()) {
                std::cout << f.name << "  " << type_string(f.type);
                if (!f.labels.empty()) std::cout << "  labels " << f.labels;
                if (!f.note.empty()) std::cout << "  " << f.note;
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
