#ifndef CLUSTERCAT_HOM_HPP
#define CLUSTERCAT_HOM_HPP

#include <vector>

#include "clustercat/ar_quiver.hpp"

namespace clustercat {

struct Hammock {
    int source = -1;
    std::vector<int> values; // by module vertex
};

// Hom/Ext dimension tables over mod kQ, computed once from the hammock
// recursion (starting functions) and its dual, cross-checked against each
// other; read access afterwards is lock-free.
class HomTables {
public:
    explicit HomTables(const ModuleARQuiver& m);

    const ModuleARQuiver& modules() const { return mod_; }

    // s_U as a table indexed by module vertices.
    Hammock starting_function(int u) const { return Hammock{u, s_[u]}; }
    Hammock ending_function(int u) const { return Hammock{u, e_[u]}; }

    // dim Hom_{kQ}(M, N) = s_M(N).
    int hom_mod(int m, int n) const { return s_[m][n]; }
    // dim Ext^1_{kQ}(M, N) = hom - <dim M, dim N>.
    int ext_mod(int m, int n) const { return ext_[m][n]; }

    // Hereditary D^b: Hom(M[a], N[b]) = Hom(M,N) if b = a, Ext^1(M,N) if
    // b = a + 1, else 0.
    int hom_derived(const DerivedObject& x, const DerivedObject& y) const;
    // Ext^1_D(X, Y) = Hom_D(X, Y[1]).
    int ext_derived(const DerivedObject& x, const DerivedObject& y) const;

private:
    const ModuleARQuiver& mod_;
    std::vector<std::vector<int>> s_, e_;
    std::vector<std::vector<int>> ext_;
};

} // namespace clustercat

#endif
