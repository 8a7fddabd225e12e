#include "clustercat/verify.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "clustercat/cluster_algebra.hpp"
#include "clustercat/errors.hpp"
#include "clustercat/json_io.hpp"
#include "clustercat/mesh_category.hpp"
#include "clustercat/tilting.hpp"
#include "clustercat/triangles.hpp"

namespace clustercat {

namespace {

struct Check {
    std::ostringstream log;
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            log << what;
        }
    }
};

SuiteResult run_suite(const std::string& name, const std::function<void(Check&)>& body) {
    SuiteResult r{name, false, ""};
    Check c;
    try {
        body(c);
        r.pass = c.ok;
        r.detail = c.log.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

void suite_roots(const Orientation& q, Check& c) {
    const DynkinType t = q.type;
    RootSystem rs(t);
    c.require(static_cast<int>(rs.positive_roots().size()) == positive_root_count(t),
              "positive root count mismatch");
    auto [qa, bip] = alternating_orientation(t);
    (void)qa;
    const auto& all = rs.almost_positive_roots();
    for (int i = 0; i < t.rank; ++i) {
        std::set<std::vector<int>> image;
        for (auto& r : all) image.insert(rs.sigma(i, r).coeffs);
        c.require(image.size() == all.size(), "sigma_i is not a bijection");
    }
    for (bool plus : {true, false}) {
        std::set<std::vector<int>> image;
        for (auto& r : all) image.insert(rs.tau_pm(plus, r, bip).coeffs);
        c.require(image.size() == all.size(), "tau_pm is not a bijection");
    }
    for (auto& a : all)
        for (auto& b : all) {
            if (a == b) continue;
            int d = rs.compatibility_degree(a, b, bip);
            c.require(d >= 0, "negative compatibility degree");
            c.require(rs.compatibility_degree(b, a, bip) == d, "degree not symmetric");
            for (bool plus : {true, false})
                c.require(rs.compatibility_degree(rs.tau_pm(plus, a, bip),
                                                  rs.tau_pm(plus, b, bip), bip) == d,
                          "degree not tau_pm invariant");
        }
    for (auto& d : rs.positive_roots())
        c.require(euler_form(d.coeffs, d.coeffs, q) == 1, "<d,d> != 1 on a positive root");
    if (c.ok) c.log << "roots=" << rs.positive_roots().size();
}

void suite_ar(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    const auto& m = cc.modules();
    const int t = positive_root_count(q.type);
    c.require(m.num_modules() == t, "module count != t");
    auto tinv = m.quiver().tau_inverse();
    for (int v = 0; v < t; ++v) {
        int w = tinv[v];
        if (w < 0) continue;
        std::vector<int> sum(q.type.rank, 0);
        for (int mid : m.quiver().mesh_middle(w))
            for (int k = 0; k < q.type.rank; ++k) sum[k] += m.dim(mid)[k];
        for (int k = 0; k < q.type.rank; ++k)
            c.require(sum[k] - m.dim(v)[k] == m.dim(w)[k], "mesh additivity violated");
    }
    validate_translation_quiver(cc.quiver());
    auto in = cc.quiver().in_neighbors();
    auto out = cc.quiver().out_neighbors();
    long orbit_total = 0;
    std::vector<bool> seen(cc.num_objects(), false);
    for (int x = 0; x < cc.num_objects(); ++x) {
        c.require(cc.tau_C(x) >= 0, "tau_C not total");
        c.require(in[x] == out[cc.tau_C(x)], "x^- != tau_C(x)^+");
        if (!seen[x])
            for (int y = x; !seen[y]; y = cc.tau_C(y)) {
                seen[y] = true;
                ++orbit_total;
            }
    }
    c.require(orbit_total == cc.num_objects(), "tau_C orbits do not partition");
    // f_normalize o F = f_normalize over the window.
    const auto& w = cc.window();
    for (int v = 0; v < w.quiver().num_vertices; ++v) {
        auto d = w.label(v);
        c.require(cc.normalize(apply_F(m, d)) == cc.normalize(d), "f_normalize not F-invariant");
    }
    if (c.ok) c.log << "objects=" << cc.num_objects();
}

void suite_hom(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    const auto& m = cc.modules();
    const auto& h = cc.homs();
    const int span = coxeter_data(q.type).h + 2;
    for (int x = 0; x < cc.num_objects(); ++x) {
        c.require(cc.hom_C(x, x) == 1, "End_C != k");
        c.require(cc.ext1_C(x, x) == 0, "self Ext^1 != 0");
        for (int y = 0; y < cc.num_objects(); ++y) {
            c.require(cc.ext1_C(x, y) == cc.ext1_C(y, x), "Ext^1_C not symmetric");
            c.require(cc.ext1_C(x, y) == cc.hom_C(y, cc.tau_C(x)), "Serre duality violated");
            c.require(cc.ext1_C(cc.tau_C(x), cc.tau_C(y)) == cc.ext1_C(x, y),
                      "Ext^1_C not tau_C invariant");
            // F-shifted Homs vanish off i in {-1, 0} and at most one i hits.
            DerivedObject fx = cc.s_representative(x);
            for (int i = 0; i < span; ++i) fx = apply_F_inverse(m, fx);
            int nonzero = 0;
            for (int i = -span; i <= span; ++i) {
                int d = h.hom_derived(fx, cc.s_representative(y));
                if (d != 0) {
                    c.require(i == -1 || i == 0, "Hom(F^i X, Y) != 0 off {-1,0}");
                    ++nonzero;
                }
                fx = apply_F(m, fx);
            }
            c.require(nonzero <= 1, "more than one F-shift with nonzero Hom");
        }
    }
    if (c.ok) c.log << "pairs=" << cc.num_objects() * cc.num_objects();
}

void suite_mesh(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    if (cc.num_objects() > 30) {
        c.log << "skipped: rank cap (t+n = " << cc.num_objects() << " > 30)";
        return;
    }
    const int guard = 4 * (coxeter_data(q.type).h + 2) * cc.num_objects();
    LinearizedCategory lmod(cc.modules().quiver(), guard);
    const auto& h = cc.homs();
    for (int x = 0; x < cc.modules().num_modules(); ++x)
        for (int y = 0; y < cc.modules().num_modules(); ++y)
            c.require(lmod.hom_dim(x, y) == h.hom_mod(x, y), "module oracle mismatch");
    LinearizedCategory lclu(cc.quiver(), guard);
    for (int x = 0; x < cc.num_objects(); ++x)
        for (int y = 0; y < cc.num_objects(); ++y)
            c.require(lclu.hom_dim(x, y) == cc.hom_C(x, y), "cluster oracle mismatch");
    if (c.ok) c.log << "levels=" << lclu.levels();
}

void suite_compat(const Orientation& q, Check& c) {
    auto [qa, bip] = alternating_orientation(q.type);
    ClusterCategory cc(qa);
    RootSystem rs(q.type);
    for (int x = 0; x < cc.num_objects(); ++x)
        for (int y = 0; y < cc.num_objects(); ++y) {
            if (x == y) continue;
            c.require(cc.ext1_C(x, y) ==
                          rs.compatibility_degree(cc.gamma(x), cc.gamma(y), bip),
                      "compatibility degree != Ext^1_C at " + root_label(cc.gamma(x)) + "," +
                          root_label(cc.gamma(y)));
        }
    if (c.ok) c.log << "alternating orientation, all distinct pairs";
}

void suite_tilting(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    auto sets = enumerate_tilting_sets(cc); // throws SizeViolation on bad size
    for (auto& set : sets) c.require(is_ext_configuration_C(cc, set), "tilting set fails E2");
    for (auto& set : sets)
        for (int drop : set) {
            ObjectSet tbar;
            for (int x : set)
                if (x != drop) tbar.push_back(x);
            auto comp = complements(cc, tbar); // throws CountViolation unless 2
            c.require(std::find(comp.begin(), comp.end(), drop) != comp.end(),
                      "dropped summand is not a complement");
        }
    auto g = exchange_graph(cc);
    c.require(g.connected(), "exchange graph disconnected");
    c.require(g.is_regular(q.type.rank), "exchange graph not n-regular");
    auto emb = tilting_module_embedding(cc);
    c.require(emb.all_embed, "a tilting module fails to induce a tilting object");
    c.require(emb.injective, "tilting module embedding not injective");
    for (auto& set : sets)
        c.require(window_set_F_stable(cc, window_preimage(cc, set)),
                  "window preimage of a tilting set is not F-stable");
    if (c.ok) c.log << "tilting sets=" << sets.size() << ", edges=" << g.edges.size();
}

void suite_triangles(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    TriangleCalculator calc(cc);
    auto reports = calc.verify_exchange_edges();
    long disjoint = 0;
    for (auto& rep : reports) {
        c.require(rep.middles_in_shared, "a middle summand escapes the shared set");
        if (rep.disjoint) ++disjoint;
    }
    c.require(disjoint == static_cast<long>(reports.size()),
              "B and B' share a summand on some edge");
    if (c.ok) c.log << "edges=" << reports.size();
}

void suite_cluster(const Orientation& q, Check& c) {
    ClusterCategory cc(q);
    auto rep = verify_cluster_tilting_bijection(cc);
    c.require(rep.cluster_count_matches, "cluster/variable counts mismatch");
    c.require(rep.sets_match, "clusters != tilting sets under denominators");
    c.require(rep.edges_match, "exchange graphs disagree under the bijection");
    auto conj = check_exchange_conjecture(cc);
    for (auto& e : conj.edges) {
        c.require(e.relation_matches, "exchange relation mismatch: " + e.detail);
        c.require(e.middles_disjoint, "B and B' not disjoint");
    }
    if (c.ok)
        c.log << "clusters=" << rep.num_clusters << ", variables=" << rep.num_variables;
}

} // namespace

std::vector<std::string> verification_suite_names() {
    return {"roots", "ar", "hom", "mesh", "compat", "tilting", "triangles", "cluster"};
}

std::vector<SuiteResult> run_verification(const Orientation& q, const std::string& suite) {
    require_valid(q);
    std::vector<SuiteResult> out;
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    if (want("roots")) out.push_back(run_suite("roots", [&](Check& c) { suite_roots(q, c); }));
    if (want("ar")) out.push_back(run_suite("ar", [&](Check& c) { suite_ar(q, c); }));
    if (want("hom")) out.push_back(run_suite("hom", [&](Check& c) { suite_hom(q, c); }));
    if (want("mesh")) out.push_back(run_suite("mesh", [&](Check& c) { suite_mesh(q, c); }));
    if (want("compat")) out.push_back(run_suite("compat", [&](Check& c) { suite_compat(q, c); }));
    if (want("tilting"))
        out.push_back(run_suite("tilting", [&](Check& c) { suite_tilting(q, c); }));
    if (want("triangles"))
        out.push_back(run_suite("triangles", [&](Check& c) { suite_triangles(q, c); }));
    if (want("cluster"))
        out.push_back(run_suite("cluster", [&](Check& c) { suite_cluster(q, c); }));
    if (out.empty()) throw UsageError("unknown suite '" + suite + "'");
    return out;
}

} // namespace clustercat
