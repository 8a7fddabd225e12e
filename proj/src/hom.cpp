#include "clustercat/hom.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "clustercat/errors.hpp"

namespace clustercat {

namespace {

// One orientation of the hammock computation; the dual runs it on the
// opposite quiver with tau and tau^{-1} swapped.
struct QuiverView {
    int num_vertices;
    std::vector<std::vector<int>> out; // arrow targets
    std::vector<std::vector<int>> in;  // arrow sources
    std::vector<int> tau;              // -1 where undefined
    std::vector<int> tau_inv;
    std::vector<int> topo;
};

QuiverView forward_view(const ModuleARQuiver& m) {
    QuiverView v;
    v.num_vertices = m.num_modules();
    v.out = m.quiver().out_neighbors();
    v.in = m.quiver().in_neighbors();
    v.tau = m.quiver().tau;
    v.tau_inv = m.quiver().tau_inverse();
    v.topo = m.topological_order();
    return v;
}

QuiverView opposite_view(const ModuleARQuiver& m) {
    QuiverView v = forward_view(m);
    std::swap(v.out, v.in);
    std::swap(v.tau, v.tau_inv);
    std::reverse(v.topo.begin(), v.topo.end());
    return v;
}

// s_u on the view: 1 on the sectional-path closure of u, 0 behind it, and
// the mesh recursion s(tau^{-1}V) = sum s(middle) - s(V) elsewhere.
std::vector<int> hammock(const QuiverView& q, int u) {
    std::vector<bool> closure(q.num_vertices, false);
    closure[u] = true;
    // BFS over (vertex, predecessor) states; a step w -> z continues a
    // sectional path when z != tau^{-1}(pred).
    std::set<std::pair<int, int>> seen;
    std::queue<std::pair<int, int>> bfs;
    bfs.emplace(u, -1);
    seen.insert({u, -1});
    while (!bfs.empty()) {
        auto [w, pred] = bfs.front();
        bfs.pop();
        for (int z : q.out[w]) {
            if (pred >= 0 && q.tau_inv[pred] == z) continue;
            closure[z] = true;
            if (seen.insert({z, w}).second) bfs.emplace(z, w);
        }
    }

    std::vector<int> val(q.num_vertices, 0);
    for (int v : q.topo) {
        if (closure[v]) {
            val[v] = 1;
            continue;
        }
        if (q.tau[v] < 0) continue; // projective off the slice: no path from u
        long x = -val[q.tau[v]];
        for (int mid : q.in[v]) x += val[mid];
        if (x < 0)
            throw NegativeHammock("mesh recursion went negative at a vertex (source " +
                                  std::to_string(u) + ")");
        val[v] = static_cast<int>(x);
    }
    return val;
}

} // namespace

HomTables::HomTables(const ModuleARQuiver& m) : mod_(m) {
    const int t = m.num_modules();
    auto fwd = forward_view(m);
    auto opp = opposite_view(m);
    s_.resize(t);
    e_.resize(t);
    for (int u = 0; u < t; ++u) {
        s_[u] = hammock(fwd, u);
        e_[u] = hammock(opp, u);
    }
    // Both recursions compute dim Hom: e_V(U) = s_U(V).
    for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v)
            if (s_[u][v] != e_[v][u])
                throw NegativeHammock("starting/ending function mismatch");

    ext_.assign(t, std::vector<int>(t, 0));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            long x = s_[a][b] - euler_form(m.dim(a), m.dim(b), m.orientation());
            if (x < 0) throw NegativeExt("hom - <d,e> < 0");
            ext_[a][b] = static_cast<int>(x);
        }
}

int HomTables::hom_derived(const DerivedObject& x, const DerivedObject& y) const {
    int a = mod_.vertex_of(x.root), b = mod_.vertex_of(y.root);
    if (a < 0 || b < 0) throw PreconditionViolated("hom_derived: not module dimension vectors");
    if (y.shift == x.shift) return hom_mod(a, b);
    if (y.shift == x.shift + 1) return ext_mod(a, b);
    return 0;
}

int HomTables::ext_derived(const DerivedObject& x, const DerivedObject& y) const {
    return hom_derived(x, DerivedObject{y.root, y.shift + 1});
}

} // namespace clustercat
