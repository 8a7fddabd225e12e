#include "clustercat/tilting.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "clustercat/errors.hpp"

namespace clustercat {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Bron-Kerbosch with pivoting; candidate sets iterate in ascending vertex
// order, so the clique stream is deterministic. Returns false from the
// callback to stop early.
class MaximalCliques {
public:
    MaximalCliques(const std::vector<std::vector<bool>>& adj,
                   std::function<bool(const std::vector<int>&)> cb)
        : adj_(adj), cb_(std::move(cb)) {}

    bool run() {
        std::vector<int> r, p, x;
        for (int v = 0; v < static_cast<int>(adj_.size()); ++v) p.push_back(v);
        return expand(r, p, x);
    }

private:
    bool expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) return cb_(r);
        int pivot = -1;
        size_t best = 0;
        for (int u : p) {
            size_t d = degree_in(u, p);
            if (pivot < 0 || d > best) {
                pivot = u;
                best = d;
            }
        }
        for (int u : x) {
            size_t d = degree_in(u, p);
            if (d > best) {
                pivot = u;
                best = d;
            }
        }
        std::vector<int> candidates;
        for (int v : p)
            if (pivot < 0 || !adj_[pivot][v]) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> np, nx;
            for (int w : p)
                if (adj_[v][w]) np.push_back(w);
            for (int w : x)
                if (adj_[v][w]) nx.push_back(w);
            r.push_back(v);
            if (!expand(r, std::move(np), std::move(nx))) return false;
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
        return true;
    }

    size_t degree_in(int u, const std::vector<int>& p) const {
        size_t d = 0;
        for (int v : p)
            if (adj_[u][v]) ++d;
        return d;
    }

    const std::vector<std::vector<bool>>& adj_;
    std::function<bool(const std::vector<int>&)> cb_;
};

void count_cliques(const std::vector<std::vector<bool>>& adj, std::vector<int>& current,
                   const std::vector<int>& candidates, std::vector<long>& f) {
    if (current.size() >= f.size()) f.resize(current.size() + 1, 0);
    ++f[current.size()];
    for (size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (adj[v][candidates[j]]) next.push_back(candidates[j]);
        current.push_back(v);
        count_cliques(adj, current, next, f);
        current.pop_back();
    }
}

} // namespace

long CompatibilityGraph::edge_count() const {
    long e = 0;
    for (int i = 0; i < num_vertices; ++i)
        for (int j = i + 1; j < num_vertices; ++j)
            if (adj[i][j]) ++e;
    return e;
}

CompatibilityGraph compatibility_graph(const ClusterCategory& cc) {
    CompatibilityGraph g;
    g.num_vertices = cc.num_objects();
    g.adj.assign(g.num_vertices, std::vector<bool>(g.num_vertices, false));
    for (int x = 0; x < g.num_vertices; ++x)
        for (int y = 0; y < g.num_vertices; ++y)
            g.adj[x][y] = (x != y) && cc.ext1_C(x, y) == 0;
    return g;
}

std::vector<ObjectSet> enumerate_tilting_sets(const ClusterCategory& cc) {
    auto g = compatibility_graph(cc);
    const int n = cc.type().rank;
    std::vector<ObjectSet> out;
    MaximalCliques mc(g.adj, [&](const std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) != n)
            throw SizeViolation("maximal Ext-orthogonal set of size " +
                                std::to_string(clique.size()) + ", expected " + std::to_string(n));
        out.push_back(sorted_copy(clique));
        return true;
    });
    mc.run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> exceptional_complex_fvector(const ClusterCategory& cc) {
    auto g = compatibility_graph(cc);
    std::vector<long> f{0};
    std::vector<int> cur;
    std::vector<int> all(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) all[v] = v;
    count_cliques(g.adj, cur, all, f);
    return f;
}

bool is_ext_configuration_C(const ClusterCategory& cc, const ObjectSet& set) {
    std::vector<bool> member(cc.num_objects(), false);
    for (int x : set) member[x] = true;
    for (int x : set)
        for (int y : set)
            if (cc.ext1_C(x, y) != 0) return false; // (E1)
    for (int z = 0; z < cc.num_objects(); ++z) {
        if (member[z]) continue;
        bool hit = false;
        for (int x : set)
            if (cc.ext1_C(x, z) != 0) {
                hit = true;
                break;
            }
        if (!hit) return false; // (E2)
    }
    return true;
}

ObjectSet complements(const ClusterCategory& cc, const ObjectSet& almost_complete) {
    const int n = cc.type().rank;
    if (static_cast<int>(almost_complete.size()) != n - 1)
        throw PreconditionViolated("almost complete tilting set must have n-1 members");
    for (int x : almost_complete)
        for (int y : almost_complete)
            if (cc.ext1_C(x, y) != 0)
                throw PreconditionViolated("almost complete tilting set is not exceptional");
    ObjectSet found;
    for (int z = 0; z < cc.num_objects(); ++z) {
        if (std::find(almost_complete.begin(), almost_complete.end(), z) != almost_complete.end())
            continue;
        bool ok = true;
        for (int x : almost_complete)
            if (cc.ext1_C(x, z) != 0 || cc.ext1_C(z, x) != 0) {
                ok = false;
                break;
            }
        if (ok) found.push_back(z);
    }
    if (found.size() != 2)
        throw CountViolation("almost complete tilting set has " + std::to_string(found.size()) +
                             " complements, expected 2");
    return found;
}

bool ExchangeGraph::connected() const {
    if (tilting_sets.empty()) return true;
    std::vector<std::vector<int>> adj(tilting_sets.size());
    for (auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(tilting_sets.size(), false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    size_t count = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                bfs.push(w);
            }
    }
    return count == tilting_sets.size();
}

bool ExchangeGraph::is_regular(int degree) const {
    std::vector<int> deg(tilting_sets.size(), 0);
    for (auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int d : deg)
        if (d != degree) return false;
    return true;
}

ExchangeGraph exchange_graph(const ClusterCategory& cc) {
    ExchangeGraph g;
    g.tilting_sets = enumerate_tilting_sets(cc);
    const int n = cc.type().rank;
    for (size_t a = 0; a < g.tilting_sets.size(); ++a)
        for (size_t b = a + 1; b < g.tilting_sets.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(g.tilting_sets[a].begin(), g.tilting_sets[a].end(),
                                  g.tilting_sets[b].begin(), g.tilting_sets[b].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == n - 1)
                g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

TiltingModuleEmbeddingReport tilting_module_embedding(const ClusterCategory& cc) {
    const auto& m = cc.modules();
    const auto& h = cc.homs();
    const int t = m.num_modules();
    const int n = cc.type().rank;
    std::vector<std::vector<bool>> adj(t, std::vector<bool>(t, false));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            adj[a][b] = (a != b) && h.ext_mod(a, b) == 0 && h.ext_mod(b, a) == 0;

    TiltingModuleEmbeddingReport rep;
    MaximalCliques mc(adj, [&](const std::vector<int>& clique) {
        if (static_cast<int>(clique.size()) != n)
            throw SizeViolation("maximal exceptional module set of size " +
                                std::to_string(clique.size()));
        ObjectSet img;
        for (int v : clique) img.push_back(cc.object_of_module_vertex(v));
        std::sort(img.begin(), img.end());
        rep.module_tilting_sets.push_back(std::move(img));
        return true;
    });
    mc.run();
    std::sort(rep.module_tilting_sets.begin(), rep.module_tilting_sets.end());

    rep.all_embed = true;
    for (auto& set : rep.module_tilting_sets)
        if (!is_ext_configuration_C(cc, set)) rep.all_embed = false;
    std::set<ObjectSet> distinct(rep.module_tilting_sets.begin(), rep.module_tilting_sets.end());
    rep.injective = distinct.size() == rep.module_tilting_sets.size();
    return rep;
}

int ext_window(const ClusterCategory& cc, int v, int w) {
    return cc.homs().ext_derived(cc.window().label(v), cc.window().label(w));
}

bool is_ext_configuration_window(const ClusterCategory& cc, const WindowSet& set) {
    const int V = cc.window().quiver().num_vertices;
    std::vector<bool> member(V, false);
    for (int v : set) member[v] = true;
    for (int v : set)
        for (int w : set)
            if (ext_window(cc, v, w) != 0) return false;
    for (int z = 0; z < V; ++z) {
        if (member[z]) continue;
        bool hit = false;
        for (int v : set)
            if (ext_window(cc, v, z) != 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::optional<WindowSet> find_window_tilting_not_config(const ClusterCategory& cc,
                                                        long max_cliques) {
    const int V = cc.window().quiver().num_vertices;
    std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
    for (int v = 0; v < V; ++v)
        for (int w = 0; w < V; ++w)
            adj[v][w] = (v != w) && ext_window(cc, v, w) == 0 && ext_window(cc, w, v) == 0;
    std::optional<WindowSet> found;
    long budget = max_cliques;
    MaximalCliques mc(adj, [&](const std::vector<int>& clique) {
        if (--budget < 0) return false;
        WindowSet s = sorted_copy(clique);
        if (!is_ext_configuration_window(cc, s)) {
            found = std::move(s);
            return false;
        }
        return true;
    });
    mc.run();
    return found;
}

WindowSet window_preimage(const ClusterCategory& cc, const ObjectSet& set) {
    std::vector<bool> member(cc.num_objects(), false);
    for (int x : set) member[x] = true;
    WindowSet out;
    const auto& w = cc.window();
    for (int v = 0; v < w.quiver().num_vertices; ++v)
        if (member[cc.normalize(w.label(v))]) out.push_back(v);
    return out;
}

bool window_set_F_stable(const ClusterCategory& cc, const WindowSet& set) {
    const auto& w = cc.window();
    std::vector<bool> member(w.quiver().num_vertices, false);
    for (int v : set) member[v] = true;
    for (int v : set) {
        int fw = w.f_image(v);
        if (fw >= 0 && !member[fw]) return false;
        int bw = w.vertex_with_label(apply_F_inverse(cc.modules(), w.label(v)));
        if (bw >= 0 && !member[bw]) return false;
    }
    return true;
}

HomConfigurationReport hom_configurations(const DynkinType& t) {
    require_valid(t);
    const auto [q, bip] = alternating_orientation(t);
    (void)bip;
    const int n = t.rank;
    const int m = coxeter_data(t).m;

    // ZDelta / tau^m: slices 0..m-1, translation wraps around.
    HomConfigurationReport rep;
    TranslationQuiver& tq = rep.quotient;
    tq.num_vertices = m * n;
    auto id = [&](int s, int i) { return ((s % m + m) % m) * n + i; };
    tq.tau.assign(tq.num_vertices, -1);
    std::set<std::pair<int, int>> arrows;
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < n; ++i) tq.tau[id(s, i)] = id(s - 1, i);
    for (int s = 0; s < m; ++s)
        for (auto [i, j] : q.arrows) {
            arrows.insert({id(s, i), id(s, j)});
            arrows.insert({id(s, j), id(s + 1, i)});
        }
    for (auto& a : arrows) tq.add_arrow(a.first, a.second);
    validate_translation_quiver(tq);

    LinearizedCategory lc(tq, 4 * (coxeter_data(t).h + 2) * n);
    const int V = tq.num_vertices;
    std::vector<std::vector<int>> homdim(V, std::vector<int>(V, 0));
    for (int v = 0; v < V; ++v)
        for (int w = 0; w < V; ++w) homdim[v][w] = lc.hom_dim(v, w);
    std::vector<std::vector<bool>> orth(V, std::vector<bool>(V, false));
    for (int v = 0; v < V; ++v)
        for (int w = 0; w < V; ++w)
            orth[v][w] = (v != w) && homdim[v][w] == 0 && homdim[w][v] == 0;

    // Every Hom-orthogonal subset such that each vertex admits a nonzero
    // map into the set.
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int start) {
        bool dominating = true;
        for (int z = 0; z < V && dominating; ++z) {
            bool hit = false;
            for (int x : cur)
                if (homdim[z][x] > 0) {
                    hit = true;
                    break;
                }
            if (!hit) dominating = false;
        }
        if (dominating && !cur.empty()) rep.configurations.push_back(cur);
        for (int v = start; v < V; ++v) {
            bool ok = true;
            for (int x : cur)
                if (!orth[x][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            dfs(v + 1);
            cur.pop_back();
        }
    };
    dfs(0);
    std::sort(rep.configurations.begin(), rep.configurations.end());

    rep.members_per_domain = rep.configurations.empty()
                                 ? 0
                                 : static_cast<int>(rep.configurations.front().size());
    for (auto& c : rep.configurations)
        if (static_cast<int>(c.size()) != rep.members_per_domain) rep.members_per_domain = -1;
    return rep;
}

} // namespace clustercat
