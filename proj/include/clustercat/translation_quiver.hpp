#ifndef CLUSTERCAT_TRANSLATION_QUIVER_HPP
#define CLUSTERCAT_TRANSLATION_QUIVER_HPP

#include <string>
#include <utility>
#include <vector>

namespace clustercat {

// A finite quiver with a partial translation tau. No loops, no multiple
// arrows; wherever tau(x) is defined, x^- = tau(x)^+, and the polarization
// a: x -> y  |->  sigma(a): tau(y) -> x is a bijection onto the arrows out
// of tau(y).
struct TranslationQuiver {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> tau; // tau[v] = vertex, or -1 where undefined

    void add_arrow(int s, int t) { arrows.emplace_back(s, t); }
    bool has_arrow(int s, int t) const;

    std::vector<std::vector<int>> out_neighbors() const;
    std::vector<std::vector<int>> in_neighbors() const;
    std::vector<int> tau_inverse() const; // -1 where undefined

    // Mesh ending at y (requires tau[y] >= 0): the sources of arrows into
    // y, i.e. the middle of tau(y) -> middle -> y.
    std::vector<int> mesh_middle(int y) const;

    // Topological order of the arrow relation; throws SizeViolation-free
    // std::logic_error if cyclic (callers only use it on module quivers).
    std::vector<int> topological_order() const;
};

// Throws DomainError subclasses / logic errors describing the first
// violated translation-quiver axiom; returns normally when valid.
void validate_translation_quiver(const TranslationQuiver& tq);

} // namespace clustercat

#endif
