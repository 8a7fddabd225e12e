#include "clustercat/json_io.hpp"

#include <future>
#include <sstream>

#include "clustercat/errors.hpp"

namespace clustercat {

json to_json(const AlmostPositiveRoot& r) { return json{{"coeffs", r.coeffs}}; }

json to_json(const Orientation& q) {
    json arrows = json::array();
    for (auto [s, t] : q.arrows) arrows.push_back({s + 1, t + 1});
    return json{{"type", q.type.name()}, {"arrows", arrows}};
}

Orientation orientation_from_json(const json& j) {
    Orientation q;
    q.type = DynkinType::parse(j.at("type").get<std::string>());
    for (auto& a : j.at("arrows"))
        q.arrows.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
    require_valid(q);
    return q;
}

AlmostPositiveRoot root_from_json(const DynkinType& t, const json& j) {
    AlmostPositiveRoot r;
    if (j.is_object())
        r.coeffs = j.at("coeffs").get<std::vector<int>>();
    else
        r.coeffs = j.get<std::vector<int>>();
    if (static_cast<int>(r.coeffs.size()) != t.rank)
        throw UsageError("root has wrong rank for " + t.name());
    return r;
}

namespace {

json tau_pairs(const TranslationQuiver& tq) {
    json out = json::array();
    for (int v = 0; v < tq.num_vertices; ++v)
        if (tq.tau[v] >= 0) out.push_back({v, tq.tau[v]});
    return out;
}

json arrows_json(const TranslationQuiver& tq) {
    json out = json::array();
    for (auto& a : tq.arrows) out.push_back({a.first, a.second});
    return out;
}

} // namespace

json module_quiver_json(const ModuleARQuiver& m) {
    json vertices = json::array();
    for (int v = 0; v < m.num_modules(); ++v) {
        json jv{{"id", v}, {"kind", "module"}, {"root", m.dim(v)}};
        if (m.vertex(v).proj_index >= 0) jv["projective"] = m.vertex(v).proj_index + 1;
        if (m.vertex(v).inj_index >= 0) jv["injective"] = m.vertex(v).inj_index + 1;
        vertices.push_back(jv);
    }
    return json{{"orientation", to_json(m.orientation())},
                {"vertices", vertices},
                {"arrows", arrows_json(m.quiver())},
                {"tau", tau_pairs(m.quiver())}};
}

json cluster_quiver_json(const ClusterCategory& cc) {
    json vertices = json::array();
    for (int x = 0; x < cc.num_objects(); ++x) {
        const auto& o = cc.object(x);
        json jv{{"id", x}, {"gamma", cc.gamma(x).coeffs}, {"label", root_label(cc.gamma(x))}};
        if (o.kind == ClusterObject::Kind::Module) {
            jv["kind"] = "module";
            jv["root"] = o.root.coeffs;
        } else {
            jv["kind"] = "shifted_projective";
            jv["index"] = o.proj + 1;
        }
        vertices.push_back(jv);
    }
    return json{{"orientation", to_json(cc.orientation())},
                {"vertices", vertices},
                {"arrows", arrows_json(cc.quiver())},
                {"tau", tau_pairs(cc.quiver())}};
}

json window_quiver_json(const ZQWindow& w) {
    json vertices = json::array();
    const auto& tq = w.quiver();
    for (int v = 0; v < tq.num_vertices; ++v)
        vertices.push_back(json{{"id", v},
                                {"slice", w.slice_of(v)},
                                {"row", w.row_of(v) + 1},
                                {"root", w.label(v).root.coeffs},
                                {"shift", w.label(v).shift}});
    return json{{"lo", w.lo()},
                {"hi", w.hi()},
                {"vertices", vertices},
                {"arrows", arrows_json(tq)},
                {"tau", tau_pairs(tq)}};
}

json ext_table_json(const ClusterCategory& cc, int threads) {
    const int n = cc.num_objects();
    std::vector<int> flat(static_cast<size_t>(n) * n, 0);
    auto fill_rows = [&](int from, int to) {
        for (int x = from; x < to; ++x)
            for (int y = 0; y < n; ++y) flat[static_cast<size_t>(x) * n + y] = cc.ext1_C(x, y);
    };
    if (threads <= 1) {
        fill_rows(0, n);
    } else {
        // Deterministic split by row ranges; the table is row-major either way.
        std::vector<std::future<void>> futs;
        int chunk = (n + threads - 1) / threads;
        for (int th = 0; th < threads; ++th) {
            int from = th * chunk, to = std::min(n, (th + 1) * chunk);
            if (from >= to) break;
            futs.push_back(std::async(std::launch::async, fill_rows, from, to));
        }
        for (auto& f : futs) f.get();
    }
    json labels = json::array();
    for (int x = 0; x < n; ++x) labels.push_back(root_label(cc.gamma(x)));
    return json{{"size", n}, {"labels", labels}, {"ext1", flat}};
}

json tilting_sets_json(const ClusterCategory& cc, const std::vector<ObjectSet>& sets) {
    json out = json::array();
    for (auto& set : sets) {
        json jset = json::array();
        for (int x : set) jset.push_back(root_label(cc.gamma(x)));
        out.push_back(jset);
    }
    return json{{"type", cc.type().name()}, {"count", sets.size()}, {"tilting_sets", out}};
}

namespace {

std::string set_label(const ClusterCategory& cc, const ObjectSet& set) {
    std::ostringstream os;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) os << ",";
        os << root_label(cc.gamma(set[i]));
    }
    return os.str();
}

} // namespace

json exchange_graph_json(const ClusterCategory& cc, const ExchangeGraph& g) {
    json verts = json::array();
    for (auto& set : g.tilting_sets) {
        json jset = json::array();
        for (int x : set) jset.push_back(root_label(cc.gamma(x)));
        verts.push_back(jset);
    }
    json edges = json::array();
    for (auto& [a, b] : g.edges) edges.push_back({a, b});
    return json{{"vertices", verts}, {"edges", edges}};
}

json triangle_json(const ClusterCategory& cc, const ExchangeTriangleResult& t) {
    auto labels = [&](const ObjectSet& s) {
        json out = json::array();
        for (int x : s) out.push_back(root_label(cc.gamma(x)));
        return out;
    };
    return json{{"M", root_label(cc.gamma(t.m))},
                {"Mstar", root_label(cc.gamma(t.m_star))},
                {"B", labels(t.b)},
                {"Bprime", labels(t.b_prime)}};
}

json seed_json(const Seed& s) {
    json vars = json::array();
    for (auto& v : s.variables) vars.push_back(v.to_string());
    return json{{"variables", vars}, {"matrix", s.matrix.entries}};
}

json enumeration_json(const ClusterEnumeration& e) {
    json clusters = json::array();
    for (auto& c : e.clusters) {
        json jc = json::array();
        for (auto& v : c) {
            json var{{"variable", v.to_string()},
                     {"denominator", v.denominator_vector()}};
            jc.push_back(var);
        }
        clusters.push_back(jc);
    }
    json vars = json::array();
    for (auto& v : e.variables)
        vars.push_back(json{{"variable", v.to_string()}, {"denominator", v.denominator_vector()}});
    json edges = json::array();
    for (auto& [a, b] : e.edges) edges.push_back({a, b});
    return json{{"clusters", clusters}, {"variables", vars}, {"edges", edges}};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string quiver_dot(const TranslationQuiver& tq, const std::vector<std::string>& labels,
                       bool with_tau) {
    std::ostringstream os;
    os << "digraph {\n";
    for (int v = 0; v < tq.num_vertices; ++v)
        os << "  n" << v << " [label=\"" << dot_escape(labels[v]) << "\"];\n";
    for (auto& a : tq.arrows) os << "  n" << a.first << " -> n" << a.second << ";\n";
    if (with_tau)
        for (int v = 0; v < tq.num_vertices; ++v)
            if (tq.tau[v] >= 0)
                os << "  n" << v << " -> n" << tq.tau[v] << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

} // namespace

std::string module_quiver_dot(const ModuleARQuiver& m, bool with_tau) {
    std::vector<std::string> labels;
    for (int v = 0; v < m.num_modules(); ++v) labels.push_back(root_label(m.vertex(v).root));
    return quiver_dot(m.quiver(), labels, with_tau);
}

std::string cluster_quiver_dot(const ClusterCategory& cc, bool with_tau) {
    std::vector<std::string> labels;
    for (int x = 0; x < cc.num_objects(); ++x) labels.push_back(root_label(cc.gamma(x)));
    return quiver_dot(cc.quiver(), labels, with_tau);
}

std::string window_quiver_dot(const ZQWindow& w, bool with_tau) {
    std::vector<std::string> labels;
    for (int v = 0; v < w.quiver().num_vertices; ++v) {
        std::ostringstream os;
        os << root_label(w.label(v).root);
        if (w.label(v).shift != 0) os << "[" << w.label(v).shift << "]";
        labels.push_back(os.str());
    }
    return quiver_dot(w.quiver(), labels, with_tau);
}

std::string exchange_graph_dot(const ClusterCategory& cc, const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (size_t i = 0; i < g.tilting_sets.size(); ++i)
        os << "  t" << i << " [label=\"" << dot_escape(set_label(cc, g.tilting_sets[i]))
           << "\"];\n";
    for (auto& [a, b] : g.edges) os << "  t" << a << " -- t" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string end_quiver_dot(const ClusterCategory& cc, const LinearizedCategory::EndQuiver& eq) {
    std::ostringstream os;
    os << "digraph {\n";
    for (size_t i = 0; i < eq.objects.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(root_label(cc.gamma(eq.objects[i])))
           << "\"];\n";
    for (size_t i = 0; i < eq.objects.size(); ++i)
        for (size_t j = 0; j < eq.objects.size(); ++j)
            for (int k = 0; k < eq.arrow_count[i][j]; ++k)
                os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace clustercat
