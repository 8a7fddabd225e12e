#ifndef CLUSTERCAT_MESH_CATEGORY_HPP
#define CLUSTERCAT_MESH_CATEGORY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "clustercat/translation_quiver.hpp"

namespace clustercat {

// The k-linear mesh category of a finite translation quiver: path spaces
// graded by length, modulo the two-sided ideal generated by the mesh
// relations sum_{a: x->y} sigma(a) a = 0 at every vertex y with tau(y)
// defined. All arithmetic is exact; ranks use fraction-free elimination.
//
// Construction walks path length upward and stops at the first level
// where every quotient piece vanishes (radical nilpotency); for a
// windowed quiver, Hom spaces out of sources whose meshes all lie inside
// the window are exact.
class LinearizedCategory {
public:
    explicit LinearizedCategory(const TranslationQuiver& tq, int max_level = 256);

    const TranslationQuiver& quiver() const { return tq_; }
    int num_objects() const { return tq_.num_vertices; }
    // Stabilization length: all paths of length >= levels() lie in the
    // mesh ideal.
    int levels() const { return static_cast<int>(by_level_.size()); }

    int hom_dim(int x, int y) const;
    // Dimension of the length-l graded piece of Hom(x, y).
    int hom_dim_at_level(int x, int y, int l) const;

    // A morphism as graded coordinates over the chosen path bases.
    struct Morphism {
        int src = -1, tgt = -1;
        std::map<int, std::vector<mpq_class>> comp; // level -> basis coords
    };

    Morphism identity(int x) const;
    Morphism basis_element(int x, int y, int k) const;
    bool is_zero(const Morphism& f) const;
    // g after f, for f: x -> y and g: y -> z.
    Morphism compose(const Morphism& f, const Morphism& g) const;
    // The single-arrow morphism of an arrow index.
    Morphism arrow_morphism(int arrow_index) const;

    // Gabriel quiver of End(T_1 + ... + T_r)^op for pairwise distinct
    // objects with 1-dimensional endomorphism rings; arrow_count[i][j] =
    // dim rad(T_i, T_j) / rad^2, arrows following maps T_i -> T_j.
    struct EndQuiver {
        std::vector<int> objects;
        std::vector<std::vector<int>> arrow_count;
    };
    EndQuiver end_quiver(const std::vector<int>& T) const;

private:
    struct Pair {
        std::vector<std::vector<int>> paths;       // arrow-index sequences
        std::map<std::vector<int>, int> path_col;  // path -> column
        // Echelon rows of the ideal piece, sparse over path columns,
        // integer entries, sorted by pivot column.
        std::vector<std::vector<std::pair<int, mpz_class>>> rows;
        std::vector<int> pivot_of_row;
        std::vector<int> free_cols; // quotient basis (paths)
        std::vector<int> col_to_free; // -1 for pivot columns
    };

    // by_level_[l][x*V + y]
    std::vector<std::vector<Pair>> by_level_;
    TranslationQuiver tq_;
    std::vector<std::vector<int>> out_arrows_; // vertex -> arrow indices
    std::vector<std::vector<int>> in_arrows_;

    const Pair* pair_at(int x, int y, int l) const;
    // Reduce a sparse path-column vector modulo the ideal rows; returns
    // coordinates over free_cols.
    std::vector<mpq_class> reduce(const Pair& p,
                                  std::map<int, mpq_class> vec) const;
};

} // namespace clustercat

#endif
