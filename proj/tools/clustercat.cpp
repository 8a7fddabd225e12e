// Command-line front end: exact cluster-category and cluster-algebra
// computations for simply-laced Dynkin types.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "clustercat/errors.hpp"
#include "clustercat/json_io.hpp"
#include "clustercat/mesh_category.hpp"
#include "clustercat/verify.hpp"

using namespace clustercat;

namespace {

Orientation parse_orientation(const std::string& type_str, const std::string& orient_str) {
    DynkinType t = DynkinType::parse(type_str);
    if (orient_str.empty() || orient_str == "alternating" || orient_str == "alt")
        return alternating_orientation(t).first;
    Orientation q{t, {}};
    std::stringstream ss(orient_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto gt = tok.find('>');
        if (gt == std::string::npos)
            throw UsageError("bad arrow '" + tok + "' (expected e.g. 1>2)");
        int s = 0, e = 0;
        try {
            s = std::stoi(tok.substr(0, gt));
            e = std::stoi(tok.substr(gt + 1));
        } catch (...) {
            throw UsageError("bad arrow '" + tok + "'");
        }
        if (s < 1 || s > t.rank || e < 1 || e > t.rank)
            throw UsageError("arrow vertex out of range in '" + tok + "'");
        q.arrows.emplace_back(s - 1, e - 1);
    }
    require_valid(q);
    return q;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    std::string type;
    std::string orientation;
    std::string format = "text";
};

void add_common(CLI::App* cmd, Options& opt, bool with_format = true) {
    cmd->add_option("--type", opt.type, "Dynkin type (A1..An, D4.., E6/E7/E8)")->required();
    cmd->add_option("--orientation", opt.orientation,
                    "'alternating' (default) or arrows like '1>2,3>2'");
    if (with_format)
        cmd->add_option("--format", opt.format, "output format: text | json | dot");
}

int run(int argc, char** argv) {
    CLI::App app{"clustercat: cluster categories, tilting sets and cluster algebras "
                 "for simply-laced Dynkin types"};
    app.require_subcommand(1);

    Options opt;

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "positive / almost positive roots");
    bool almost = false;
    add_common(roots_cmd, opt);
    roots_cmd->add_flag("--almost", almost, "include negative simple roots");

    // ar-quiver
    auto* ar_cmd = app.add_subcommand("ar-quiver", "AR-quiver of mod kQ, of C, or a ZQ window");
    std::string category = "module";
    bool with_tau = false;
    int lo = 0, hi = 0;
    add_common(ar_cmd, opt);
    ar_cmd->add_option("--category", category, "module (default) | cluster | window");
    ar_cmd->add_flag("--tau", with_tau, "render tau as dashed back-edges (dot)");
    ar_cmd->add_option("--lo", lo, "window lower slice (window category)");
    ar_cmd->add_option("--hi", hi, "window upper slice (window category)");

    // cluster-objects
    auto* objects_cmd = app.add_subcommand("cluster-objects", "the t+n objects of C");
    add_common(objects_cmd, opt);

    // ext-table
    auto* ext_cmd = app.add_subcommand("ext-table", "(t+n)x(t+n) Ext^1_C dimension table");
    int threads = 1;
    add_common(ext_cmd, opt);
    ext_cmd->add_option("--threads", threads, "worker threads (deterministic output)");

    // tilting list
    auto* tilting_cmd = app.add_subcommand("tilting", "tilting set operations");
    auto* tilting_list = tilting_cmd->add_subcommand("list", "enumerate tilting sets");
    bool count_only = false;
    add_common(tilting_list, opt);
    tilting_list->add_flag("--count", count_only, "print only the number of tilting sets");

    // complements
    auto* comp_cmd = app.add_subcommand("complements",
                                        "the two completions of an almost complete tilting set");
    std::string set_str;
    add_common(comp_cmd, opt);
    comp_cmd->add_option("--set", set_str, "n-1 gamma labels, comma separated (e.g. '12,-3')")
        ->required();

    // exchange-graph
    auto* exch_cmd = app.add_subcommand("exchange-graph", "tilting exchange graph");
    add_common(exch_cmd, opt);

    // triangle
    auto* tri_cmd = app.add_subcommand("triangle", "exchange triangles of a pair");
    std::string pair_str;
    add_common(tri_cmd, opt);
    tri_cmd->add_option("--pair", pair_str, "two gamma labels separated by '|' (e.g. '2|1')")
        ->required();

    // cluster mutate / enumerate
    auto* cluster_cmd = app.add_subcommand("cluster", "cluster algebra operations");
    auto* mutate_cmd = cluster_cmd->add_subcommand("mutate", "mutate the initial seed");
    std::string seq_str;
    add_common(mutate_cmd, opt);
    mutate_cmd->add_option("--seq", seq_str, "mutation indices, 1-based, e.g. '2,1,3'")
        ->required();
    auto* enum_cmd = cluster_cmd->add_subcommand("enumerate", "BFS closure of the initial seed");
    add_common(enum_cmd, opt);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
    std::string suite = "all";
    add_common(verify_cmd, opt, false);
    verify_cmd->add_option("--suite", suite, "all (default) or one of: roots, ar, hom, mesh, "
                                             "compat, tilting, triangles, cluster");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (roots_cmd->parsed()) {
        DynkinType t = DynkinType::parse(opt.type);
        RootSystem rs(t);
        const auto& list = almost ? rs.almost_positive_roots() : rs.positive_roots();
        if (opt.format == "json") {
            json out = json::array();
            for (auto& r : list) out.push_back(to_json(r));
            emit(json{{"type", t.name()}, {"count", list.size()}, {"roots", out}});
        } else {
            for (auto& r : list) std::cout << root_label(r) << "\n";
        }
        return 0;
    }

    if (ar_cmd->parsed()) {
        Orientation q = parse_orientation(opt.type, opt.orientation);
        if (category == "module") {
            ModuleARQuiver m(q);
            if (opt.format == "dot")
                std::cout << module_quiver_dot(m, with_tau);
            else
                emit(module_quiver_json(m));
        } else if (category == "cluster") {
            ClusterCategory cc(q);
            if (opt.format == "dot")
                std::cout << cluster_quiver_dot(cc, with_tau);
            else
                emit(cluster_quiver_json(cc));
        } else if (category == "window") {
            ModuleARQuiver m(q);
            if (lo == 0 && hi == 0) {
                hi = coxeter_data(q.type).h + 2;
                lo = -hi;
            }
            ZQWindow w(m, lo, hi);
            if (opt.format == "dot")
                std::cout << window_quiver_dot(w, with_tau);
            else
                emit(window_quiver_json(w));
        } else {
            throw UsageError("unknown --category '" + category + "'");
        }
        return 0;
    }

    if (objects_cmd->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        if (opt.format == "json") {
            emit(cluster_quiver_json(cc));
        } else {
            for (int x = 0; x < cc.num_objects(); ++x) {
                const auto& o = cc.object(x);
                std::cout << root_label(cc.gamma(x)) << "\t"
                          << (o.kind == ClusterObject::Kind::Module
                                  ? "module"
                                  : "P" + std::to_string(o.proj + 1) + "[1]")
                          << "\n";
            }
        }
        return 0;
    }

    if (ext_cmd->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        emit(ext_table_json(cc, threads));
        return 0;
    }

    if (tilting_list->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        auto sets = enumerate_tilting_sets(cc);
        if (count_only) {
            std::cout << sets.size() << "\n";
        } else if (opt.format == "json") {
            emit(tilting_sets_json(cc, sets));
        } else {
            for (auto& set : sets) {
                for (size_t i = 0; i < set.size(); ++i)
                    std::cout << (i ? "," : "") << root_label(cc.gamma(set[i]));
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (comp_cmd->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        ObjectSet tbar;
        std::stringstream ss(set_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int obj = cc.object_of_gamma(parse_root_label(cc.type(), tok));
            if (obj < 0) throw UsageError("'" + tok + "' is not an object of C");
            tbar.push_back(obj);
        }
        std::sort(tbar.begin(), tbar.end());
        auto two = complements(cc, tbar);
        if (opt.format == "json") {
            json out = json::array();
            for (int x : two) out.push_back(root_label(cc.gamma(x)));
            emit(json{{"complements", out}});
        } else {
            for (int x : two) std::cout << root_label(cc.gamma(x)) << "\n";
        }
        return 0;
    }

    if (exch_cmd->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        auto g = exchange_graph(cc);
        if (opt.format == "dot")
            std::cout << exchange_graph_dot(cc, g);
        else
            emit(exchange_graph_json(cc, g));
        return 0;
    }

    if (tri_cmd->parsed()) {
        ClusterCategory cc(parse_orientation(opt.type, opt.orientation));
        auto bar = pair_str.find('|');
        if (bar == std::string::npos) throw UsageError("--pair wants '<rootA>|<rootB>'");
        int x = cc.object_of_gamma(parse_root_label(cc.type(), pair_str.substr(0, bar)));
        int y = cc.object_of_gamma(parse_root_label(cc.type(), pair_str.substr(bar + 1)));
        if (x < 0 || y < 0) throw UsageError("pair members are not objects of C");
        auto tri = exchange_triangles(cc, x, y);
        emit(triangle_json(cc, tri));
        return 0;
    }

    if (mutate_cmd->parsed()) {
        Orientation q = parse_orientation(opt.type, opt.orientation);
        Seed s = initial_seed(q);
        std::stringstream ss(seq_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int k = 0;
            try {
                k = std::stoi(tok);
            } catch (...) {
                throw UsageError("bad mutation index '" + tok + "'");
            }
            if (k < 1 || k > q.type.rank) throw UsageError("mutation index out of range");
            s = mutate_seed(s, k - 1);
        }
        emit(seed_json(s));
        return 0;
    }

    if (enum_cmd->parsed()) {
        Orientation q = parse_orientation(opt.type, opt.orientation);
        auto e = enumerate_seeds(initial_seed(q));
        if (opt.format == "json") {
            emit(enumeration_json(e));
        } else {
            std::cout << "clusters: " << e.clusters.size()
                      << "\nvariables: " << e.variables.size() << "\n";
            for (auto& v : e.variables) std::cout << v.to_string() << "\n";
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        Orientation q = parse_orientation(opt.type, opt.orientation);
        auto results = run_verification(q, suite);
        bool all = true;
        for (auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.suite;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all = all && r.pass;
        }
        return all ? 0 : 1;
    }

    throw UsageError("no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
