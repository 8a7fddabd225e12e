#ifndef CLUSTERCAT_TILTING_HPP
#define CLUSTERCAT_TILTING_HPP

#include <optional>
#include <vector>

#include "clustercat/cluster_category.hpp"
#include "clustercat/mesh_category.hpp"

namespace clustercat {

// Objects are ClusterCategory indices; sets are kept sorted.
using ObjectSet = std::vector<int>;

struct CompatibilityGraph {
    int num_vertices = 0;
    std::vector<std::vector<bool>> adj; // ext1_C(x, y) == 0, x != y
    long edge_count() const;
};

CompatibilityGraph compatibility_graph(const ClusterCategory& cc);

// All maximal cliques, Bron-Kerbosch with pivoting, vertices in ascending
// order; output sorted lexicographically. Throws SizeViolation if a
// maximal clique has size != n.
std::vector<ObjectSet> enumerate_tilting_sets(const ClusterCategory& cc);

// All cliques (faces of the exceptional complex) counted by cardinality:
// f[k] = number of exceptional sets of size k, f[0] = 1.
std::vector<long> exceptional_complex_fvector(const ClusterCategory& cc);

// (E1) + (E2) against all indecomposables of C.
bool is_ext_configuration_C(const ClusterCategory& cc, const ObjectSet& set);

// The two completions of an (n-1)-element exceptional set. Throws
// CountViolation if the number of completions differs from 2.
ObjectSet complements(const ClusterCategory& cc, const ObjectSet& almost_complete);

struct ExchangeGraph {
    std::vector<ObjectSet> tilting_sets; // vertices
    std::vector<std::pair<int, int>> edges; // share n-1 members
    bool connected() const;
    bool is_regular(int degree) const;
};

ExchangeGraph exchange_graph(const ClusterCategory& cc);

// Basic tilting kQ-modules (pairwise Ext-orthogonal module n-sets) and
// their images in C; every image must be a tilting set of C.
struct TiltingModuleEmbeddingReport {
    std::vector<ObjectSet> module_tilting_sets; // as C-object sets
    bool all_embed = false;
    bool injective = false;
};
TiltingModuleEmbeddingReport tilting_module_embedding(const ClusterCategory& cc);

// Window-level Ext-configuration machinery (vertices of cc.window()).
using WindowSet = std::vector<int>;

// Ext^1_D between window labels.
int ext_window(const ClusterCategory& cc, int v, int w);

// (E1)+(E2) of the window category (window-relative).
bool is_ext_configuration_window(const ClusterCategory& cc, const WindowSet& set);

// A maximal Ext-orthogonal window set that fails (E2), if one exists:
// the Fig. 2 phenomenon. Deterministic search.
std::optional<WindowSet> find_window_tilting_not_config(const ClusterCategory& cc,
                                                        long max_cliques = 2000000);

// The preimage in the window of a C-object set.
WindowSet window_preimage(const ClusterCategory& cc, const ObjectSet& set);
// F-stability of a window set within the window.
bool window_set_F_stable(const ClusterCategory& cc, const WindowSet& set);

// Hom-configurations on the quotient translation quiver ZDelta/tau^m.
struct HomConfigurationReport {
    TranslationQuiver quotient;
    std::vector<std::vector<int>> configurations; // quotient vertex sets
    int members_per_domain = 0;                   // common size, -1 if mixed
};
HomConfigurationReport hom_configurations(const DynkinType& t);

} // namespace clustercat

#endif
