#include "clustercat/ar_quiver.hpp"

#include <algorithm>
#include <set>

#include "clustercat/errors.hpp"

namespace clustercat {

namespace {

// Reachability over the tree orientation: (dim P_i)_j = #paths i -> j,
// which is 0/1 on a tree; dim I_i counts paths j -> i.
std::vector<std::vector<int>> path_closure(const Orientation& q, bool forward) {
    const int n = q.type.rank;
    std::vector<std::vector<int>> adj(n);
    for (auto [s, t] : q.arrows) {
        if (forward)
            adj[s].push_back(t);
        else
            adj[t].push_back(s);
    }
    std::vector<std::vector<int>> dims(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        std::vector<int> stack{i};
        dims[i][i] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!dims[i][v]) {
                    dims[i][v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return dims;
}

} // namespace

ModuleARQuiver::ModuleARQuiver(const Orientation& q) : q_(q), roots_(q.type) {
    require_valid(q);
    const int n = q.type.rank;
    const int t = positive_root_count(q.type);

    auto proj_dims = path_closure(q, true);
    auto inj_dims = path_closure(q, false);

    proj_vertex_.assign(n, -1);
    inj_vertex_.assign(n, -1);
    tq_.num_vertices = 0;
    tq_.tau.clear();

    auto add_vertex = [&](const AlmostPositiveRoot& r) {
        int id = tq_.num_vertices++;
        tq_.tau.push_back(-1);
        vertices_.push_back(ModuleVertex{r, -1, -1});
        by_root_[r.coeffs] = id;
        if (static_cast<int>(vertices_.size()) > t)
            throw KnittingDiverged("more than t = " + std::to_string(t) + " vertices knitted");
        return id;
    };

    // Projective slice: ids 0..n-1 in vertex order; arrows P_j -> P_i for
    // each arrow i -> j of Q (radical inclusions).
    for (int i = 0; i < n; ++i) {
        int id = add_vertex(AlmostPositiveRoot{proj_dims[i]});
        vertices_[id].proj_index = i;
        proj_vertex_[i] = id;
    }
    for (auto [i, j] : q.arrows) tq_.add_arrow(proj_vertex_[j], proj_vertex_[i]);

    // Knit: a vertex is ready once every in-neighbor is decided; then its
    // out-arrows are complete and the mesh difference tells whether
    // tau^{-1} exists (difference is a positive root) or the vertex is
    // injective.
    std::vector<bool> decided;
    auto is_ready = [&](int v) {
        for (auto& a : tq_.arrows)
            if (a.second == v && !decided[a.first]) return false;
        return true;
    };
    decided.assign(t, false);
    int num_decided = 0;
    while (num_decided < static_cast<int>(vertices_.size())) {
        int v = -1;
        for (int u = 0; u < static_cast<int>(vertices_.size()); ++u)
            if (!decided[u] && is_ready(u)) {
                v = u;
                break;
            }
        if (v < 0) throw KnittingDiverged("knitting deadlocked (input is not a valid orientation?)");

        std::vector<int> targets;
        for (auto& a : tq_.arrows)
            if (a.first == v) targets.push_back(a.second);
        std::sort(targets.begin(), targets.end());

        AlmostPositiveRoot cand{std::vector<int>(n, 0)};
        for (int w : targets)
            for (int k = 0; k < n; ++k) cand.coeffs[k] += vertices_[w].root.coeffs[k];
        for (int k = 0; k < n; ++k) cand.coeffs[k] -= vertices_[v].root.coeffs[k];

        if (roots_.is_positive_root(cand)) {
            int w = add_vertex(cand);
            decided.resize(vertices_.size(), false);
            tq_.tau[w] = v;
            for (int x : targets) tq_.add_arrow(x, w);
        }
        decided[v] = true;
        ++num_decided;
    }

    if (static_cast<int>(vertices_.size()) != t)
        throw KnittingDiverged("knitted " + std::to_string(vertices_.size()) +
                               " vertices, expected " + std::to_string(t));

    // Mark injectives and check against the path-count dimension vectors.
    tau_inv_ = tq_.tau_inverse();
    for (int i = 0; i < n; ++i) {
        auto it = by_root_.find(inj_dims[i]);
        if (it == by_root_.end()) throw KnittingDiverged("dim I_i missing from the knitted quiver");
        vertices_[it->second].inj_index = i;
        inj_vertex_[i] = it->second;
    }
    for (int v = 0; v < t; ++v) {
        bool no_tau_inv = tau_inv_[v] < 0;
        if (no_tau_inv != (vertices_[v].inj_index >= 0))
            throw KnittingDiverged("tau^{-1} support does not match the injectives");
        if ((tq_.tau[v] < 0) != (vertices_[v].proj_index >= 0))
            throw KnittingDiverged("tau support does not match the projectives");
    }
    validate_translation_quiver(tq_);
    topo_ = tq_.topological_order();
}

int ModuleARQuiver::vertex_of(const AlmostPositiveRoot& r) const {
    auto it = by_root_.find(r.coeffs);
    return it == by_root_.end() ? -1 : it->second;
}

const AlmostPositiveRoot& ModuleARQuiver::dim_projective(int i) const {
    return vertices_[proj_vertex_[i]].root;
}

const AlmostPositiveRoot& ModuleARQuiver::dim_injective(int i) const {
    return vertices_[inj_vertex_[i]].root;
}

DerivedObject tau_derived(const ModuleARQuiver& m, const DerivedObject& x) {
    int v = m.vertex_of(x.root);
    if (v < 0) throw PreconditionViolated("tau_derived: not a module dimension vector");
    int pi = m.vertex(v).proj_index;
    if (pi >= 0) return DerivedObject{m.dim_injective(pi), x.shift - 1};
    return DerivedObject{m.vertex(m.tau(v)).root, x.shift};
}

DerivedObject tau_derived_inverse(const ModuleARQuiver& m, const DerivedObject& x) {
    int v = m.vertex_of(x.root);
    if (v < 0) throw PreconditionViolated("tau_derived_inverse: not a module dimension vector");
    int ii = m.vertex(v).inj_index;
    if (ii >= 0) return DerivedObject{m.dim_projective(ii), x.shift + 1};
    return DerivedObject{m.vertex(m.tau_inverse(v)).root, x.shift};
}

DerivedObject apply_F(const ModuleARQuiver& m, const DerivedObject& x) {
    DerivedObject y = tau_derived_inverse(m, x);
    y.shift += 1;
    return y;
}

DerivedObject apply_F_inverse(const ModuleARQuiver& m, const DerivedObject& x) {
    return tau_derived(m, DerivedObject{x.root, x.shift - 1});
}

AlmostPositiveRoot gamma_label(const DynkinType& t, const ClusterObject& x) {
    if (x.kind == ClusterObject::Kind::Module) return x.root;
    return negative_simple(t, x.proj);
}

ClusterObject gamma_inverse(const DynkinType& t, const AlmostPositiveRoot& r) {
    int i = r.negative_simple_index();
    if (i >= 0) return ClusterObject{ClusterObject::Kind::ShiftedProjective, {}, i};
    (void)t;
    return ClusterObject{ClusterObject::Kind::Module, r, -1};
}

ClusterObject f_normalize(const ModuleARQuiver& m, const DerivedObject& x) {
    DerivedObject y = x;
    auto in_S = [&](const DerivedObject& d) {
        if (d.shift == 0) return true;
        if (d.shift != 1) return false;
        int v = m.vertex_of(d.root);
        return v >= 0 && m.vertex(v).proj_index >= 0;
    };
    // F raises the shift by at least 1, F^{-1} lowers it; each orbit meets
    // S exactly once, so this walk terminates.
    while (!in_S(y)) {
        if (y.shift < 0)
            y = apply_F(m, y);
        else
            y = apply_F_inverse(m, y);
    }
    if (y.shift == 0) return ClusterObject{ClusterObject::Kind::Module, y.root, -1};
    int v = m.vertex_of(y.root);
    return ClusterObject{ClusterObject::Kind::ShiftedProjective, {}, m.vertex(v).proj_index};
}

DerivedObject s_representative(const ModuleARQuiver& m, const ClusterObject& x) {
    if (x.kind == ClusterObject::Kind::Module) return DerivedObject{x.root, 0};
    return DerivedObject{m.dim_projective(x.proj), 1};
}

ZQWindow::ZQWindow(const ModuleARQuiver& m, int lo, int hi) : mod_(m), lo_(lo), hi_(hi) {
    if (!(lo <= 0 && 0 <= hi)) throw PreconditionViolated("zq window must contain slice 0");
    const auto& q = m.orientation();
    const int n = q.type.rank;

    // Slice offsets of the projectives: p(src) = p(tgt) + 1 along arrows.
    std::vector<int> p(n, 0);
    std::vector<bool> fixed(n, false);
    fixed[0] = true;
    for (bool progress = true; progress;) {
        progress = false;
        for (auto [s, t] : q.arrows) {
            if (fixed[s] && !fixed[t]) {
                p[t] = p[s] - 1;
                fixed[t] = progress = true;
            } else if (fixed[t] && !fixed[s]) {
                p[s] = p[t] + 1;
                fixed[s] = progress = true;
            }
        }
    }

    const int width = hi - lo + 1;
    tq_.num_vertices = width * n;
    tq_.tau.assign(tq_.num_vertices, -1);
    coords_.resize(tq_.num_vertices);
    labels_.resize(tq_.num_vertices);
    auto id = [&](int slice, int row) { return (slice - lo) * n + row; };
    for (int s = lo; s <= hi; ++s)
        for (int i = 0; i < n; ++i) {
            coords_[id(s, i)] = {s, i};
            if (s > lo) tq_.tau[id(s, i)] = id(s - 1, i);
        }
    for (int s = lo; s <= hi; ++s)
        for (auto [i, j] : q.arrows) {
            tq_.add_arrow(id(s, i), id(s, j));
            if (s + 1 <= hi) tq_.add_arrow(id(s, j), id(s + 1, i));
        }

    // Label row i by propagating tau_D from the projective anchor (p(i), i).
    for (int i = 0; i < n; ++i) {
        DerivedObject base{m.dim_projective(i), 0};
        DerivedObject d = base;
        for (int s = p[i]; s <= hi; ++s) {
            if (s >= lo) labels_[id(s, i)] = d;
            if (s < hi) d = tau_derived_inverse(m, d);
        }
        d = base;
        for (int s = p[i]; s >= lo; --s) {
            labels_[id(s, i)] = d;
            if (s > lo) d = tau_derived(m, d);
        }
    }
    for (int v = 0; v < tq_.num_vertices; ++v) by_label_[labels_[v]] = v;
}

int ZQWindow::vertex_at(int n, int i) const {
    if (n < lo_ || n > hi_) return -1;
    return (n - lo_) * mod_.orientation().type.rank + i;
}

int ZQWindow::vertex_with_label(const DerivedObject& x) const {
    auto it = by_label_.find(x);
    return it == by_label_.end() ? -1 : it->second;
}

int ZQWindow::f_image(int v) const {
    return vertex_with_label(apply_F(mod_, labels_[v]));
}

} // namespace clustercat
