#ifndef CLUSTERCAT_DYNKIN_HPP
#define CLUSTERCAT_DYNKIN_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace clustercat {

// Vertices are 0-based in code; all text/JSON output uses the canonical
// 1-based numbering (A_n: path 1-2-...-n; D_n: path 1-...-(n-2) with n-1
// and n attached to n-2; E_n: Bourbaki). Root coefficient index i refers
// to vertex i+1.

enum class Series : char { A = 'A', D = 'D', E = 'E' };

struct DynkinType {
    Series series = Series::A;
    int rank = 1;

    std::string name() const;
    static DynkinType parse(const std::string& text); // throws UsageError
    bool operator==(const DynkinType&) const = default;
};

bool is_valid(const DynkinType& t);
void require_valid(const DynkinType& t); // throws UsageError

// Undirected edges of the diagram, canonical numbering, each edge once,
// (u, v) with u < v.
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t);

// Number of positive roots for the type (A: n(n+1)/2, D: n(n-1),
// E6/E7/E8: 36/63/120).
int positive_root_count(const DynkinType& t);

// Coxeter number h and m = h - 1 (max nonzero path length in the mesh
// category).
struct CoxeterData {
    int h;
    int m;
};
CoxeterData coxeter_data(const DynkinType& t);

// Degrees d_1..d_n of the Weyl group; the number of clusters is
// prod (d_i + h) / d_i.
std::vector<int> weyl_degrees(const DynkinType& t);
std::int64_t cluster_count_formula(const DynkinType& t);

struct AlmostPositiveRoot {
    std::vector<int> coeffs;

    bool is_negative_simple() const; // -alpha_i for some i
    int negative_simple_index() const; // 0-based vertex, -1 if positive
    bool is_positive() const;
    int height() const; // sum of coefficients

    bool operator==(const AlmostPositiveRoot&) const = default;
    // Graded-lex: by height, then lexicographic on coefficients.
    std::strong_ordering operator<=>(const AlmostPositiveRoot& o) const;
};

AlmostPositiveRoot negative_simple(const DynkinType& t, int i);
AlmostPositiveRoot simple_root(const DynkinType& t, int i);

// Fig. 4 style shorthand: a positive root with 0/1 coefficients prints as
// its concatenated (1-based) support indices ("123"); -alpha_i prints as
// "-i"; other roots print as a bracketed coefficient list "[1,2,1,1]".
std::string root_label(const AlmostPositiveRoot& r);
AlmostPositiveRoot parse_root_label(const DynkinType& t, const std::string& s);

struct Orientation {
    DynkinType type;
    std::vector<std::pair<int, int>> arrows; // 0-based (source, target)

    // Arrow count i -> j (0 or 1 on a tree).
    int arrow_count(int i, int j) const;
};

void require_valid(const Orientation& q); // throws UsageError

struct Bipartition {
    std::vector<int> plus;  // I^+, 0-based, sorted
    std::vector<int> minus; // I^-, 0-based, sorted
};

void require_valid(const DynkinType& t, const Bipartition& b);

// Parity 2-coloring by distance from vertex 0: even class is I^-, odd is
// I^+; every arrow points from I^- to I^+.
std::pair<Orientation, Bipartition> alternating_orientation(const DynkinType& t);

class RootSystem {
public:
    explicit RootSystem(DynkinType t);

    const DynkinType& type() const { return type_; }
    int rank() const { return type_.rank; }

    // Cartan matrix entry a_ij.
    int cartan(int i, int j) const { return cartan_[i][j]; }

    // All positive roots, graded-lex order.
    const std::vector<AlmostPositiveRoot>& positive_roots() const { return positive_; }
    // Positive roots plus negative simples, graded-lex order (negatives first).
    const std::vector<AlmostPositiveRoot>& almost_positive_roots() const { return almost_; }

    bool is_positive_root(const AlmostPositiveRoot& r) const;
    bool is_almost_positive(const AlmostPositiveRoot& r) const;
    // Index into almost_positive_roots(); -1 if absent.
    int index_of(const AlmostPositiveRoot& r) const;

    // Simple reflection s_i on an arbitrary coefficient vector.
    AlmostPositiveRoot reflect(int i, const AlmostPositiveRoot& r) const;
    // sigma_i: fixes -alpha_j (j != i), otherwise s_i.
    AlmostPositiveRoot sigma(int i, const AlmostPositiveRoot& r) const;
    // tau_+ / tau_- for a bipartition (product of sigma_i over the part).
    AlmostPositiveRoot tau_pm(bool plus, const AlmostPositiveRoot& r, const Bipartition& b) const;

    // Fomin-Zelevinsky compatibility degree via the tau_{+-} recursion
    // (tau_+ applied first). Returns 0 for equal arguments by convention.
    // Throws NoReduction if 2*(h+2) alternations do not reach a base case.
    int compatibility_degree(const AlmostPositiveRoot& a, const AlmostPositiveRoot& b,
                             const Bipartition& bip) const;

private:
    DynkinType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<AlmostPositiveRoot> positive_;
    std::vector<AlmostPositiveRoot> almost_;
};

// Hereditary Euler form <d, e> = sum_i d_i e_i - sum_{i->j} d_i e_j.
long euler_form(const std::vector<int>& d, const std::vector<int>& e, const Orientation& q);

} // namespace clustercat

#endif
