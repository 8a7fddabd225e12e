#include "clustercat/mesh_category.hpp"

#include <algorithm>
#include <numeric>

#include "clustercat/errors.hpp"

namespace clustercat {

namespace {

using SparseRow = std::vector<std::pair<int, mpz_class>>;

void normalize_content(SparseRow& r) {
    mpz_class g = 0;
    for (auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (!r.empty() && r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
}

// Fraction-free elimination of `row` against the echelon rows (sorted by
// pivot column); inserts a surviving remainder and reports whether the
// rank grew.
bool echelon_insert(std::vector<SparseRow>& rows, std::vector<int>& pivots, SparseRow row) {
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
        int lead = row.front().first;
        auto it = std::lower_bound(pivots.begin(), pivots.end(), lead);
        if (it == pivots.end() || *it != lead) {
            normalize_content(row);
            size_t pos = static_cast<size_t>(it - pivots.begin());
            pivots.insert(it, lead);
            rows.insert(rows.begin() + pos, std::move(row));
            return true;
        }
        const SparseRow& base = rows[static_cast<size_t>(it - pivots.begin())];
        // row := row * lc(base) - base * lc(row), killing column `lead`.
        mpz_class a = base.front().second, b = row.front().second;
        std::map<int, mpz_class> acc;
        for (auto& [c, v] : row) acc[c] = v * a;
        for (auto& [c, v] : base) acc[c] -= v * b;
        row.clear();
        for (auto& [c, v] : acc)
            if (v != 0) row.emplace_back(c, v);
    }
    return false;
}

} // namespace

LinearizedCategory::LinearizedCategory(const TranslationQuiver& tq, int max_level) : tq_(tq) {
    const int V = tq.num_vertices;
    out_arrows_.assign(V, {});
    in_arrows_.assign(V, {});
    for (int a = 0; a < static_cast<int>(tq.arrows.size()); ++a) {
        out_arrows_[tq.arrows[a].first].push_back(a);
        in_arrows_[tq.arrows[a].second].push_back(a);
    }
    std::map<std::pair<int, int>, int> arrow_index;
    for (int a = 0; a < static_cast<int>(tq.arrows.size()); ++a) arrow_index[tq.arrows[a]] = a;

    auto pair_index = [V](int x, int y) { return static_cast<size_t>(x) * V + y; };

    // Level 0: identities; no relations in degrees 0 and 1.
    by_level_.emplace_back(static_cast<size_t>(V) * V);
    for (int x = 0; x < V; ++x) {
        Pair& p = by_level_[0][pair_index(x, x)];
        p.paths.push_back({});
        p.path_col[{}] = 0;
        p.col_to_free.assign(1, 0);
        p.free_cols.assign(1, 0);
    }

    for (int level = 1;; ++level) {
        if (level > max_level)
            throw NoStabilization("mesh ideal did not stabilize within " +
                                  std::to_string(max_level) + " path lengths");
        by_level_.emplace_back(static_cast<size_t>(V) * V);
        auto& cur = by_level_[level];
        const auto& prev = by_level_[level - 1];

        // Paths: every level-(l-1) path extended by each outgoing arrow.
        for (int x = 0; x < V; ++x)
            for (int y = 0; y < V; ++y) {
                const Pair& pp = prev[pair_index(x, y)];
                for (const auto& path : pp.paths)
                    for (int a : out_arrows_[y]) {
                        int z = tq_.arrows[a].second;
                        Pair& cp = cur[pair_index(x, z)];
                        std::vector<int> ext = path;
                        ext.push_back(a);
                        cp.path_col.emplace(std::move(ext), 0);
                    }
            }
        for (int x = 0; x < V; ++x)
            for (int z = 0; z < V; ++z) {
                Pair& cp = cur[pair_index(x, z)];
                cp.paths.resize(cp.path_col.size());
                int col = 0;
                for (auto& [path, c] : cp.path_col) {
                    c = col++;
                    cp.paths[c] = path;
                }
            }

        auto insert_row = [&](int x, int z, const std::map<std::vector<int>, mpz_class>& combo) {
            Pair& cp = cur[pair_index(x, z)];
            SparseRow row;
            for (auto& [path, coeff] : combo) {
                if (coeff == 0) continue;
                auto it = cp.path_col.find(path);
                if (it == cp.path_col.end())
                    throw NoStabilization("internal: ideal term is not an enumerated path");
                row.emplace_back(it->second, coeff);
            }
            echelon_insert(cp.rows, cp.pivot_of_row, std::move(row));
        };

        // Mesh generators sum_{a: x->y} sigma(a) a live in degree 2; higher
        // degrees of the homogeneous ideal are A*I + I*A.
        if (level == 2) {
            for (int y = 0; y < V; ++y) {
                int ty = tq_.tau[y];
                if (ty < 0) continue;
                std::map<std::vector<int>, mpz_class> combo;
                for (int a : in_arrows_[y]) {
                    int x = tq_.arrows[a].first;
                    auto it = arrow_index.find({ty, x});
                    if (it == arrow_index.end())
                        throw NoStabilization("polarization missing: no arrow tau(y) -> x");
                    combo[{it->second, a}] += 1;
                }
                if (!combo.empty()) insert_row(ty, y, combo);
            }
        } else if (level >= 3) {
            for (int x = 0; x < V; ++x)
                for (int y = 0; y < V; ++y) {
                    const Pair& pp = prev[pair_index(x, y)];
                    for (const auto& row : pp.rows) {
                        for (int a : out_arrows_[y]) { // r * a
                            int z = tq_.arrows[a].second;
                            std::map<std::vector<int>, mpz_class> combo;
                            for (auto& [col, coeff] : row) {
                                std::vector<int> path = pp.paths[col];
                                path.push_back(a);
                                combo[std::move(path)] += coeff;
                            }
                            insert_row(x, z, combo);
                        }
                        for (int a : in_arrows_[x]) { // a * r
                            int w = tq_.arrows[a].first;
                            std::map<std::vector<int>, mpz_class> combo;
                            for (auto& [col, coeff] : row) {
                                std::vector<int> path{a};
                                path.insert(path.end(), pp.paths[col].begin(),
                                            pp.paths[col].end());
                                combo[std::move(path)] += coeff;
                            }
                            insert_row(w, y, combo);
                        }
                    }
                }
        }

        // Quotient basis = non-pivot path columns; stop once a level dies.
        bool any_nonzero = false;
        for (size_t pi = 0; pi < cur.size(); ++pi) {
            Pair& cp = cur[pi];
            cp.col_to_free.assign(cp.paths.size(), -1);
            size_t r = 0;
            for (int c = 0; c < static_cast<int>(cp.paths.size()); ++c) {
                if (r < cp.pivot_of_row.size() && cp.pivot_of_row[r] == c) {
                    ++r;
                    continue;
                }
                cp.col_to_free[c] = static_cast<int>(cp.free_cols.size());
                cp.free_cols.push_back(c);
            }
            if (!cp.free_cols.empty()) any_nonzero = true;
        }
        if (!any_nonzero) {
            by_level_.pop_back();
            break;
        }
    }
}

const LinearizedCategory::Pair* LinearizedCategory::pair_at(int x, int y, int l) const {
    if (l < 0 || l >= levels()) return nullptr;
    return &by_level_[l][static_cast<size_t>(x) * tq_.num_vertices + y];
}

int LinearizedCategory::hom_dim_at_level(int x, int y, int l) const {
    const Pair* p = pair_at(x, y, l);
    return p ? static_cast<int>(p->free_cols.size()) : 0;
}

int LinearizedCategory::hom_dim(int x, int y) const {
    int d = 0;
    for (int l = 0; l < levels(); ++l) d += hom_dim_at_level(x, y, l);
    return d;
}

LinearizedCategory::Morphism LinearizedCategory::identity(int x) const {
    Morphism f;
    f.src = f.tgt = x;
    f.comp[0] = {mpq_class(1)};
    return f;
}

LinearizedCategory::Morphism LinearizedCategory::basis_element(int x, int y, int k) const {
    Morphism f;
    f.src = x;
    f.tgt = y;
    for (int l = 0; l < levels(); ++l) {
        int d = hom_dim_at_level(x, y, l);
        if (k < d) {
            std::vector<mpq_class> coords(d, 0);
            coords[k] = 1;
            f.comp[l] = std::move(coords);
            return f;
        }
        k -= d;
    }
    throw PreconditionViolated("basis_element index out of range");
}

LinearizedCategory::Morphism LinearizedCategory::arrow_morphism(int arrow_index) const {
    auto [x, y] = tq_.arrows[arrow_index];
    const Pair* p = pair_at(x, y, 1);
    Morphism f;
    f.src = x;
    f.tgt = y;
    if (!p) return f;
    auto it = p->path_col.find({arrow_index});
    std::vector<mpq_class> coords(p->free_cols.size(), 0);
    if (it != p->path_col.end() && p->col_to_free[it->second] >= 0)
        coords[p->col_to_free[it->second]] = 1;
    f.comp[1] = std::move(coords);
    return f;
}

bool LinearizedCategory::is_zero(const Morphism& f) const {
    for (auto& [l, coords] : f.comp)
        for (auto& c : coords)
            if (c != 0) return false;
    return true;
}

std::vector<mpq_class> LinearizedCategory::reduce(const Pair& p,
                                                  std::map<int, mpq_class> vec) const {
    // Rows are in echelon form with ascending pivots and support to the
    // right of the pivot, so one ascending sweep clears every pivot column.
    for (size_t r = 0; r < p.rows.size(); ++r) {
        int piv = p.pivot_of_row[r];
        auto it = vec.find(piv);
        if (it == vec.end() || it->second == 0) continue;
        mpq_class factor = it->second / mpq_class(p.rows[r].front().second);
        for (auto& [c, v] : p.rows[r]) vec[c] -= factor * mpq_class(v);
    }
    std::vector<mpq_class> coords(p.free_cols.size(), 0);
    for (auto& [c, v] : vec) {
        if (v == 0) continue;
        if (p.col_to_free[c] < 0)
            throw PreconditionViolated("reduction left weight on a pivot column");
        coords[p.col_to_free[c]] = v;
    }
    return coords;
}

LinearizedCategory::Morphism LinearizedCategory::compose(const Morphism& f,
                                                         const Morphism& g) const {
    if (f.tgt != g.src) throw PreconditionViolated("compose: targets/sources do not match");
    Morphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    for (auto& [lf, cf] : f.comp)
        for (auto& [lg, cg] : g.comp) {
            int l = lf + lg;
            const Pair* target = pair_at(h.src, h.tgt, l);
            if (!target) continue; // beyond stabilization: zero
            const Pair* pf = pair_at(f.src, f.tgt, lf);
            const Pair* pg = pair_at(g.src, g.tgt, lg);
            std::map<int, mpq_class> vec;
            for (size_t i = 0; i < cf.size(); ++i) {
                if (cf[i] == 0) continue;
                const auto& pa = pf->paths[pf->free_cols[i]];
                for (size_t j = 0; j < cg.size(); ++j) {
                    if (cg[j] == 0) continue;
                    const auto& pb = pg->paths[pg->free_cols[j]];
                    std::vector<int> joined = pa;
                    joined.insert(joined.end(), pb.begin(), pb.end());
                    auto it = target->path_col.find(joined);
                    if (it == target->path_col.end())
                        throw PreconditionViolated("compose: concatenation not enumerated");
                    vec[it->second] += cf[i] * cg[j];
                }
            }
            auto coords = reduce(*target, std::move(vec));
            auto& acc = h.comp[l];
            if (acc.empty()) acc.assign(coords.size(), 0);
            for (size_t c = 0; c < coords.size(); ++c) acc[c] += coords[c];
        }
    return h;
}

LinearizedCategory::EndQuiver LinearizedCategory::end_quiver(const std::vector<int>& T) const {
    const int r = static_cast<int>(T.size());
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j)
            if (T[i] == T[j]) throw PreconditionViolated("end_quiver: objects must be distinct");
        if (hom_dim(T[i], T[i]) != 1)
            throw PreconditionViolated("end_quiver: End(T_i) must be 1-dimensional");
    }
    EndQuiver eq;
    eq.objects = T;
    eq.arrow_count.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue; // End = k means rad(T_i, T_i) = 0: no loops
            int dim_rad = hom_dim(T[i], T[j]);
            if (dim_rad == 0) continue;
            // rad^2(T_i, T_j): composites through the other members of T.
            std::vector<std::vector<mpq_class>> rows;
            int rank = 0;
            auto add_gen = [&](std::vector<mpq_class> v) {
                for (auto& row : rows) {
                    size_t piv = 0;
                    while (piv < row.size() && row[piv] == 0) ++piv;
                    if (piv < v.size() && v[piv] != 0) {
                        mpq_class fac = v[piv] / row[piv];
                        for (size_t c = piv; c < v.size(); ++c) v[c] -= fac * row[c];
                    }
                }
                for (auto& x : v)
                    if (x != 0) {
                        rows.push_back(std::move(v));
                        std::sort(rows.begin(), rows.end(),
                                  [](const std::vector<mpq_class>& a,
                                     const std::vector<mpq_class>& b) {
                                      size_t pa = 0, pb = 0;
                                      while (pa < a.size() && a[pa] == 0) ++pa;
                                      while (pb < b.size() && b[pb] == 0) ++pb;
                                      return pa < pb;
                                  });
                        ++rank;
                        return;
                    }
            };
            for (int k = 0; k < r; ++k) {
                if (k == i || k == j) continue;
                int dik = hom_dim(T[i], T[k]);
                int dkj = hom_dim(T[k], T[j]);
                for (int a = 0; a < dik; ++a)
                    for (int b = 0; b < dkj; ++b) {
                        auto h = compose(basis_element(T[i], T[k], a),
                                         basis_element(T[k], T[j], b));
                        std::vector<mpq_class> flat;
                        for (int l = 0; l < levels(); ++l) {
                            int d = hom_dim_at_level(T[i], T[j], l);
                            auto it = h.comp.find(l);
                            for (int c = 0; c < d; ++c)
                                flat.push_back(it == h.comp.end() ? mpq_class(0) : it->second[c]);
                        }
                        add_gen(std::move(flat));
                    }
            }
            eq.arrow_count[i][j] = dim_rad - rank;
        }
    return eq;
}

} // namespace clustercat
