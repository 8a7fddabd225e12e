#ifndef CLUSTERCAT_CLUSTER_CATEGORY_HPP
#define CLUSTERCAT_CLUSTER_CATEGORY_HPP

#include <map>
#include <memory>
#include <vector>

#include "clustercat/ar_quiver.hpp"
#include "clustercat/hom.hpp"

namespace clustercat {

// The cluster category C = D^b(kQ)/F as a finite labeled translation
// quiver on the t + n objects of the fundamental domain, with tau_C a
// total permutation: M |-> tau M off the projectives, P_i |-> P_i[1],
// P_i[1] |-> I_i. Arrows are the images of the ZQ arrows under
// f_normalize. Immutable after construction.
class ClusterCategory {
public:
    explicit ClusterCategory(const Orientation& q);

    const Orientation& orientation() const { return mod_->orientation(); }
    const DynkinType& type() const { return mod_->orientation().type; }
    const ModuleARQuiver& modules() const { return *mod_; }
    const HomTables& homs() const { return *hom_; }
    const ZQWindow& window() const { return *window_; }

    int num_objects() const { return static_cast<int>(objects_.size()); }
    const ClusterObject& object(int x) const { return objects_[x]; }
    // Objects are indexed in graded-lex order of their gamma labels.
    const AlmostPositiveRoot& gamma(int x) const { return gamma_[x]; }
    int object_of_gamma(const AlmostPositiveRoot& r) const; // -1 if absent
    int object_of(const ClusterObject& c) const;
    int object_of_module_vertex(int v) const { return module_object_[v]; }
    bool is_module(int x) const { return objects_[x].kind == ClusterObject::Kind::Module; }
    // Module AR-quiver vertex of a module object, -1 for shifted projectives.
    int module_vertex(int x) const { return module_vertex_[x]; }

    const TranslationQuiver& quiver() const { return tq_; }
    int tau_C(int x) const { return tau_[x]; }
    int tau_C_inverse(int x) const { return tau_inv_[x]; }
    int tau_C_power(int x, long k) const;
    // Order of the permutation tau_C.
    long tau_C_period() const { return period_; }

    DerivedObject s_representative(int x) const;
    int normalize(const DerivedObject& d) const; // object of f_normalize(d)

    int hom_C(int x, int y) const { return hom_table_[x][y]; }
    int ext1_C(int x, int y) const { return ext_table_[x][y]; }

private:
    std::unique_ptr<ModuleARQuiver> mod_;
    std::unique_ptr<HomTables> hom_;
    std::unique_ptr<ZQWindow> window_;
    std::vector<ClusterObject> objects_;
    std::vector<AlmostPositiveRoot> gamma_;
    std::map<std::vector<int>, int> by_gamma_;
    std::vector<int> module_object_; // module vertex -> object
    std::vector<int> module_vertex_; // object -> module vertex or -1
    TranslationQuiver tq_;
    std::vector<int> tau_, tau_inv_;
    long period_ = 1;
    std::vector<std::vector<int>> hom_table_, ext_table_;
};

} // namespace clustercat

#endif
