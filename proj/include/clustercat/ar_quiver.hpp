#ifndef CLUSTERCAT_AR_QUIVER_HPP
#define CLUSTERCAT_AR_QUIVER_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clustercat/dynkin.hpp"
#include "clustercat/translation_quiver.hpp"

namespace clustercat {

struct ModuleVertex {
    AlmostPositiveRoot root;
    int proj_index = -1; // i if this is P_{i+1}
    int inj_index = -1;  // i if this is I_{i+1}
};

// The AR-quiver of mod kQ, built by knitting from the projective slice.
// Vertex ids follow knitting order; tau is undefined exactly on the
// projectives and tau^{-1} exactly on the injectives.
class ModuleARQuiver {
public:
    explicit ModuleARQuiver(const Orientation& q);

    const Orientation& orientation() const { return q_; }
    const RootSystem& roots() const { return roots_; }
    const TranslationQuiver& quiver() const { return tq_; }
    int num_modules() const { return tq_.num_vertices; }

    const ModuleVertex& vertex(int v) const { return vertices_[v]; }
    const std::vector<int>& dim(int v) const { return vertices_[v].root.coeffs; }
    int vertex_of(const AlmostPositiveRoot& positive_root) const; // -1 if absent

    int projective_vertex(int i) const { return proj_vertex_[i]; }
    int injective_vertex(int i) const { return inj_vertex_[i]; }
    const AlmostPositiveRoot& dim_projective(int i) const;
    const AlmostPositiveRoot& dim_injective(int i) const;

    int tau(int v) const { return tq_.tau[v]; }          // -1 on projectives
    int tau_inverse(int v) const { return tau_inv_[v]; } // -1 on injectives

    const std::vector<int>& topological_order() const { return topo_; }

private:
    Orientation q_;
    RootSystem roots_;
    TranslationQuiver tq_;
    std::vector<ModuleVertex> vertices_;
    std::vector<int> proj_vertex_;
    std::vector<int> inj_vertex_;
    std::vector<int> tau_inv_;
    std::vector<int> topo_;
    std::map<std::vector<int>, int> by_root_;
};

// Indecomposable of D = D^b(kQ): a module placed at a shift.
struct DerivedObject {
    AlmostPositiveRoot root; // positive root of a module
    int shift = 0;

    bool operator==(const DerivedObject&) const = default;
    auto operator<=>(const DerivedObject&) const = default;
};

// tau_D: modules translate by module tau; tau_D(P_i[s]) = I_i[s-1].
DerivedObject tau_derived(const ModuleARQuiver& m, const DerivedObject& x);
DerivedObject tau_derived_inverse(const ModuleARQuiver& m, const DerivedObject& x);
// F = tau^{-1}[1] and its inverse.
DerivedObject apply_F(const ModuleARQuiver& m, const DerivedObject& x);
DerivedObject apply_F_inverse(const ModuleARQuiver& m, const DerivedObject& x);

// Indecomposable of C in the fundamental domain S = ind(mod kQ v kQ[1]).
struct ClusterObject {
    enum class Kind { Module, ShiftedProjective };
    Kind kind = Kind::Module;
    AlmostPositiveRoot root; // positive root when Module
    int proj = -1;           // 0-based vertex when ShiftedProjective

    bool operator==(const ClusterObject&) const = default;
};

// gamma_Q: Module(d) -> d, P_{i+1}[1] -> -alpha_{i+1}.
AlmostPositiveRoot gamma_label(const DynkinType& t, const ClusterObject& x);
ClusterObject gamma_inverse(const DynkinType& t, const AlmostPositiveRoot& r);

// Reduce a derived object into S by finitely many applications of F or
// F^{-1}; total and idempotent on canonical forms.
ClusterObject f_normalize(const ModuleARQuiver& m, const DerivedObject& x);
DerivedObject s_representative(const ModuleARQuiver& m, const ClusterObject& x);

// A finite window of ZQ with vertices (n, i), lo <= n <= hi, labeled by
// DerivedObjects so that the projective P_i sits at slice offset p(i)
// determined by p(src) = p(tgt) + 1 along each arrow of Q.
class ZQWindow {
public:
    ZQWindow(const ModuleARQuiver& m, int lo, int hi);

    const TranslationQuiver& quiver() const { return tq_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int slice_of(int v) const { return coords_[v].first; }
    int row_of(int v) const { return coords_[v].second; }
    int vertex_at(int n, int i) const; // -1 outside window
    const DerivedObject& label(int v) const { return labels_[v]; }
    int vertex_with_label(const DerivedObject& x) const; // -1 if absent

    // The graph automorphism induced by F, as a partial window self-map.
    int f_image(int v) const;

private:
    const ModuleARQuiver& mod_;
    int lo_, hi_;
    TranslationQuiver tq_;
    std::vector<std::pair<int, int>> coords_;
    std::vector<DerivedObject> labels_;
    std::map<DerivedObject, int> by_label_;
};

} // namespace clustercat

#endif
