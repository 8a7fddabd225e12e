#include "clustercat/cluster_category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "clustercat/errors.hpp"

namespace clustercat {

ClusterCategory::ClusterCategory(const Orientation& q) {
    mod_ = std::make_unique<ModuleARQuiver>(q);
    hom_ = std::make_unique<HomTables>(*mod_);
    const int n = q.type.rank;
    const int t = mod_->num_modules();

    for (int v = 0; v < t; ++v)
        objects_.push_back(ClusterObject{ClusterObject::Kind::Module, mod_->vertex(v).root, -1});
    for (int i = 0; i < n; ++i)
        objects_.push_back(ClusterObject{ClusterObject::Kind::ShiftedProjective, {}, i});
    std::sort(objects_.begin(), objects_.end(), [&](const ClusterObject& a, const ClusterObject& b) {
        return gamma_label(q.type, a) < gamma_label(q.type, b);
    });
    module_object_.assign(t, -1);
    module_vertex_.assign(objects_.size(), -1);
    for (int x = 0; x < num_objects(); ++x) {
        gamma_.push_back(gamma_label(q.type, objects_[x]));
        by_gamma_[gamma_[x].coeffs] = x;
        if (objects_[x].kind == ClusterObject::Kind::Module) {
            int v = mod_->vertex_of(objects_[x].root);
            module_object_[v] = x;
            module_vertex_[x] = v;
        }
    }

    // tau_C as a closed-form permutation.
    tau_.assign(num_objects(), -1);
    for (int x = 0; x < num_objects(); ++x) {
        const auto& o = objects_[x];
        if (o.kind == ClusterObject::Kind::ShiftedProjective) {
            tau_[x] = object_of_gamma(mod_->dim_injective(o.proj));
        } else {
            int v = mod_->vertex_of(o.root);
            int pi = mod_->vertex(v).proj_index;
            if (pi >= 0)
                tau_[x] = object_of_gamma(negative_simple(q.type, pi));
            else
                tau_[x] = object_of_gamma(mod_->vertex(mod_->tau(v)).root);
        }
    }
    tau_inv_.assign(num_objects(), -1);
    for (int x = 0; x < num_objects(); ++x) {
        if (tau_[x] < 0 || tau_inv_[tau_[x]] >= 0)
            throw PreconditionViolated("tau_C is not a permutation");
        tau_inv_[tau_[x]] = x;
    }
    // Period = lcm of cycle lengths.
    {
        std::vector<bool> seen(num_objects(), false);
        period_ = 1;
        for (int x = 0; x < num_objects(); ++x) {
            if (seen[x]) continue;
            long len = 0;
            for (int y = x; !seen[y]; y = tau_[y]) {
                seen[y] = true;
                ++len;
            }
            period_ = std::lcm(period_, len);
        }
    }

    // Arrows of Gamma(C) = images of the ZQ arrows.
    const int margin = coxeter_data(q.type).h + 2;
    window_ = std::make_unique<ZQWindow>(*mod_, -margin, margin);
    const auto& wq = window_->quiver();
    std::vector<int> obj_of(wq.num_vertices);
    for (int v = 0; v < wq.num_vertices; ++v)
        obj_of[v] = object_of(f_normalize(*mod_, window_->label(v)));
    std::set<std::pair<int, int>> arrow_set;
    for (auto& a : wq.arrows) arrow_set.insert({obj_of[a.first], obj_of[a.second]});
    tq_.num_vertices = num_objects();
    tq_.tau = tau_;
    for (auto& a : arrow_set) {
        if (a.first == a.second)
            throw PreconditionViolated("quotient quiver acquired a loop");
        tq_.add_arrow(a.first, a.second);
    }
    validate_translation_quiver(tq_);
    // The quotient map is a covering: out-degrees must agree with ZQ on
    // interior window vertices.
    {
        auto wout = wq.out_neighbors();
        auto cout_ = tq_.out_neighbors();
        for (int v = 0; v < wq.num_vertices; ++v) {
            int s = window_->slice_of(v);
            if (s <= window_->lo() || s >= window_->hi()) continue;
            if (wout[v].size() != cout_[obj_of[v]].size())
                throw PreconditionViolated("quotient quiver lost an arrow (covering violated)");
        }
    }

    // Hom / Ext^1 dimension tables.
    hom_table_.assign(num_objects(), std::vector<int>(num_objects(), 0));
    ext_table_.assign(num_objects(), std::vector<int>(num_objects(), 0));
    for (int x = 0; x < num_objects(); ++x) {
        DerivedObject xr = s_representative(x);
        DerivedObject xr_m1 = apply_F_inverse(*mod_, xr);
        for (int y = 0; y < num_objects(); ++y) {
            DerivedObject yr = s_representative(y);
            // Hom_C(X,Y) = sum over i in {-1, 0} of Hom_D(F^i X, Y).
            hom_table_[x][y] = hom_->hom_derived(xr, yr) + hom_->hom_derived(xr_m1, yr);

            const auto& ox = objects_[x];
            const auto& oy = objects_[y];
            if (ox.kind == ClusterObject::Kind::Module && oy.kind == ClusterObject::Kind::Module) {
                int a = module_vertex_[x], b = module_vertex_[y];
                ext_table_[x][y] = hom_->ext_mod(a, b) + hom_->ext_mod(b, a);
            } else if (ox.kind == ClusterObject::Kind::ShiftedProjective &&
                       oy.kind == ClusterObject::Kind::ShiftedProjective) {
                ext_table_[x][y] = 0;
            } else {
                int i = ox.kind == ClusterObject::Kind::ShiftedProjective ? ox.proj : oy.proj;
                int b = ox.kind == ClusterObject::Kind::ShiftedProjective ? module_vertex_[y]
                                                                          : module_vertex_[x];
                ext_table_[x][y] = hom_->hom_mod(mod_->projective_vertex(i), b);
            }
        }
    }
}

int ClusterCategory::object_of_gamma(const AlmostPositiveRoot& r) const {
    auto it = by_gamma_.find(r.coeffs);
    return it == by_gamma_.end() ? -1 : it->second;
}

int ClusterCategory::object_of(const ClusterObject& c) const {
    return object_of_gamma(gamma_label(type(), c));
}

int ClusterCategory::tau_C_power(int x, long k) const {
    long r = k % period_;
    if (r < 0) r += period_;
    int y = x;
    for (long s = 0; s < r; ++s) y = tau_[y];
    return y;
}

DerivedObject ClusterCategory::s_representative(int x) const {
    return clustercat::s_representative(*mod_, objects_[x]);
}

int ClusterCategory::normalize(const DerivedObject& d) const {
    return object_of(f_normalize(*mod_, d));
}

} // namespace clustercat
