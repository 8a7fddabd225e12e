#include "clustercat/cluster_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "clustercat/errors.hpp"

namespace clustercat {

// --- LaurentPoly -----------------------------------------------------------

LaurentPoly LaurentPoly::constant(int nvars, const mpq_class& c) {
    LaurentPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    LaurentPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& exp, const mpq_class& c) {
    LaurentPoly p(nvars);
    p.add_term(exp, c);
    return p;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_integral() const {
    for (auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    GradedLexLess less;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return true;
        if (less(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor,
                                                     long step_cap) const {
    if (divisor.is_zero()) return std::nullopt;
    LaurentPoly rem = *this;
    LaurentPoly quot(nvars_);
    const auto& dlead = *divisor.terms_.rbegin();
    for (long step = 0; !rem.is_zero(); ++step) {
        if (step > step_cap) return std::nullopt;
        const auto& rlead = *rem.terms_.rbegin();
        std::vector<int> e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = rlead.first[i] - dlead.first[i];
        mpq_class c = rlead.second / dlead.second;
        quot.add_term(e, c);
        // rem -= c u^e * divisor
        for (auto& [de, dc] : divisor.terms_) {
            std::vector<int> ee(nvars_);
            for (int i = 0; i < nvars_; ++i) ee[i] = e[i] + de[i];
            rem.add_term(ee, -c * dc);
        }
    }
    return quot;
}

std::vector<int> LaurentPoly::denominator_vector() const {
    std::vector<int> d(nvars_, 0);
    bool first = true;
    for (auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            d[i] = first ? -e[i] : std::max(d[i], -e[i]);
        first = false;
    }
    return d;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Clear denominators: shift by the negative part of the min exponents.
    std::vector<int> den(nvars_, 0);
    auto dv = denominator_vector();
    for (int i = 0; i < nvars_; ++i) den[i] = std::max(dv[i], 0);
    auto mono_str = [&](const std::vector<int>& e) {
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any) os << "*";
            os << "u" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
            any = true;
        }
        return any ? os.str() : std::string();
    };
    std::ostringstream num;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpq_class c = it->second;
        std::vector<int> e = it->first;
        for (int i = 0; i < nvars_; ++i) e[i] += den[i];
        std::string mono = mono_str(e);
        std::string cs = c.get_str();
        if (!first) {
            num << (c >= 0 ? " + " : " - ");
            if (c < 0) cs = mpq_class(-c).get_str();
        }
        if (mono.empty())
            num << cs;
        else if (cs == "1")
            num << mono;
        else if (cs == "-1" && first)
            num << "-" << mono;
        else
            num << cs << "*" << mono;
        first = false;
    }
    std::string dstr = mono_str(den);
    if (dstr.empty()) return num.str();
    std::string n = num.str();
    if (terms_.size() > 1) n = "(" + n + ")";
    return n + "/" + dstr;
}

// --- matrices and seeds ----------------------------------------------------

void require_sign_skew_symmetric(const ExchangeMatrix& b) {
    const int n = b.size();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(b.entries[i].size()) != n)
            throw PreconditionViolated("exchange matrix is not square");
        if (b.entries[i][i] != 0) throw PreconditionViolated("nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            bool zi = b.entries[i][j] == 0, zj = b.entries[j][i] == 0;
            if (zi != zj) throw PreconditionViolated("b_xy = 0 iff b_yx = 0 violated");
            if (!zi && (b.entries[i][j] > 0) == (b.entries[j][i] > 0))
                throw PreconditionViolated("b_xy > 0 iff b_yx < 0 violated");
        }
    }
}

ExchangeMatrix matrix_from_quiver(const Orientation& q) {
    require_valid(q);
    const int n = q.type.rank;
    ExchangeMatrix b;
    b.entries.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int nij = q.arrow_count(i, j);
            b.entries[i][j] = nij != 0 ? nij : -q.arrow_count(j, i);
        }
    require_sign_skew_symmetric(b);
    return b;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    const int n = b.size();
    if (k < 0 || k >= n) throw PreconditionViolated("mutation index out of range");
    ExchangeMatrix out = b;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == k || y == k)
                out.entries[x][y] = -b.entries[x][y];
            else
                out.entries[x][y] =
                    b.entries[x][y] + (std::abs(b.entries[x][k]) * b.entries[k][y] +
                                       b.entries[x][k] * std::abs(b.entries[k][y])) /
                                          2;
        }
    require_sign_skew_symmetric(out);
    return out;
}

Seed initial_seed(const Orientation& q) {
    Seed s;
    s.matrix = matrix_from_quiver(q);
    const int n = q.type.rank;
    for (int i = 0; i < n; ++i) s.variables.push_back(LaurentPoly::variable(n, i));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.matrix.size();
    if (k < 0 || k >= n) throw PreconditionViolated("mutation index out of range");
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (int x = 0; x < n; ++x) {
        long bxk = s.matrix.entries[x][k];
        for (long c = 0; c < std::abs(bxk); ++c) {
            if (bxk > 0)
                pos = pos * s.variables[x];
            else
                neg = neg * s.variables[x];
        }
    }
    auto q = (pos + neg).divide_exact(s.variables[k]);
    if (!q)
        throw LaurentViolation("exchange relation does not divide exactly at index " +
                               std::to_string(k + 1));
    if (!q->is_integral())
        throw LaurentViolation("mutated variable has non-integer coefficients");
    Seed out = s;
    out.variables[k] = *q;
    out.matrix = mutate_matrix(s.matrix, k);
    return out;
}

namespace {

std::string poly_key(const LaurentPoly& p) {
    std::ostringstream os;
    for (auto& [e, c] : p.terms()) {
        for (int x : e) os << x << ",";
        os << ":" << c.get_str() << ";";
    }
    return os.str();
}

// Canonical form: variables sorted, matrix rows/cols permuted along.
std::pair<Seed, std::string> canonicalize(const Seed& s) {
    const int n = s.matrix.size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.variables[a] < s.variables[b]; });
    Seed c;
    c.variables.reserve(n);
    c.matrix.entries.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        c.variables.push_back(s.variables[order[i]]);
        for (int j = 0; j < n; ++j) c.matrix.entries[i][j] = s.matrix.entries[order[i]][order[j]];
    }
    std::ostringstream key;
    for (auto& v : c.variables) key << poly_key(v) << "|";
    for (auto& row : c.matrix.entries)
        for (long x : row) key << x << ",";
    return {std::move(c), key.str()};
}

} // namespace

ClusterEnumeration enumerate_seeds(const Seed& start, long seed_cap) {
    if (seed_cap <= 0) {
        seed_cap = 200000;
        if (const char* env = std::getenv("CLUSTERCAT_SEED_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) seed_cap = v;
        }
    }
    ClusterEnumeration out;
    std::map<std::string, int> seen; // canonical key -> cluster index
    std::map<std::string, LaurentPoly> vars;
    std::set<std::pair<int, int>> edges;

    auto [c0, key0] = canonicalize(start);
    seen.emplace(key0, 0);
    out.clusters.push_back(c0.variables);
    std::deque<Seed> frontier{c0};
    std::deque<int> frontier_id{0};

    while (!frontier.empty()) {
        Seed s = std::move(frontier.front());
        int sid = frontier_id.front();
        frontier.pop_front();
        frontier_id.pop_front();
        for (auto& v : s.variables) vars.emplace(poly_key(v), v);
        for (int k = 0; k < s.matrix.size(); ++k) {
            Seed next = mutate_seed(s, k);
            auto [cn, key] = canonicalize(next);
            auto it = seen.find(key);
            int nid;
            if (it == seen.end()) {
                nid = static_cast<int>(out.clusters.size());
                if (nid >= seed_cap)
                    throw BudgetExceeded("seed closure exceeded cap of " +
                                         std::to_string(seed_cap));
                seen.emplace(key, nid);
                out.clusters.push_back(cn.variables);
                frontier.push_back(std::move(cn));
                frontier_id.push_back(nid);
            } else {
                nid = it->second;
            }
            if (nid != sid) edges.insert({std::min(sid, nid), std::max(sid, nid)});
        }
    }
    for (auto& [k, v] : vars) out.variables.push_back(v);
    std::sort(out.variables.begin(), out.variables.end());
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

AlmostPositiveRoot denominator_root(const LaurentPoly& v) {
    return AlmostPositiveRoot{v.denominator_vector()};
}

namespace {

// Cluster -> tilting set via denominator vectors and gamma^{-1}.
std::optional<ObjectSet> cluster_to_objects(const ClusterCategory& cc,
                                            const std::vector<LaurentPoly>& cluster) {
    ObjectSet set;
    for (auto& v : cluster) {
        int obj = cc.object_of_gamma(denominator_root(v));
        if (obj < 0) return std::nullopt;
        set.push_back(obj);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() != cluster.size()) return std::nullopt;
    return set;
}

} // namespace

BijectionReport verify_cluster_tilting_bijection(const ClusterCategory& cc) {
    BijectionReport rep;
    auto enumeration = enumerate_seeds(initial_seed(cc.orientation()));
    rep.num_clusters = static_cast<long>(enumeration.clusters.size());
    rep.num_variables = static_cast<long>(enumeration.variables.size());

    auto tilting = enumerate_tilting_sets(cc);
    rep.cluster_count_matches = rep.num_clusters == static_cast<long>(tilting.size()) &&
                                rep.num_variables == cc.num_objects();

    std::set<ObjectSet> tilting_family(tilting.begin(), tilting.end());
    std::set<ObjectSet> cluster_family;
    std::vector<ObjectSet> cluster_sets(enumeration.clusters.size());
    bool ok = true;
    for (size_t i = 0; i < enumeration.clusters.size(); ++i) {
        auto set = cluster_to_objects(cc, enumeration.clusters[i]);
        if (!set) {
            ok = false;
            break;
        }
        cluster_sets[i] = *set;
        cluster_family.insert(*set);
    }
    rep.sets_match = ok && cluster_family == tilting_family;

    if (rep.sets_match) {
        auto g = exchange_graph(cc);
        std::set<std::pair<ObjectSet, ObjectSet>> tilting_edges, cluster_edges;
        for (auto& [a, b] : g.edges) {
            auto pa = g.tilting_sets[a], pb = g.tilting_sets[b];
            tilting_edges.insert({std::min(pa, pb), std::max(pa, pb)});
        }
        for (auto& [a, b] : enumeration.edges) {
            auto pa = cluster_sets[a], pb = cluster_sets[b];
            cluster_edges.insert({std::min(pa, pb), std::max(pa, pb)});
        }
        rep.edges_match = tilting_edges == cluster_edges;
    }
    return rep;
}

ConjectureReport check_exchange_conjecture(const ClusterCategory& cc) {
    ConjectureReport rep;
    auto enumeration = enumerate_seeds(initial_seed(cc.orientation()));

    // Variable attached to each object of C, through denominator vectors.
    std::vector<LaurentPoly> var_of(cc.num_objects());
    std::vector<bool> have(cc.num_objects(), false);
    for (auto& v : enumeration.variables) {
        int obj = cc.object_of_gamma(denominator_root(v));
        if (obj >= 0 && !have[obj]) {
            var_of[obj] = v;
            have[obj] = true;
        }
    }
    const int n = cc.type().rank;
    rep.all_pass = true;
    for (int x = 0; x < cc.num_objects(); ++x)
        if (!have[x]) {
            rep.all_pass = false;
            ConjectureEdgeReport e;
            e.detail = "no cluster variable with denominator " + root_label(cc.gamma(x));
            rep.edges.push_back(std::move(e));
            return rep;
        }

    for (auto& edge : verify_exchange_edges(cc)) {
        ConjectureEdgeReport e;
        e.tilting_a = edge.tilting_a;
        e.tilting_b = edge.tilting_b;
        e.m = edge.m;
        e.m_star = edge.m_star;
        e.middles_disjoint = edge.disjoint;
        LaurentPoly lhs = var_of[edge.m] * var_of[edge.m_star];
        LaurentPoly prod_b = LaurentPoly::constant(n, 1);
        for (int v : edge.b) prod_b = prod_b * var_of[v];
        LaurentPoly prod_bp = LaurentPoly::constant(n, 1);
        for (int v : edge.b_prime) prod_bp = prod_bp * var_of[v];
        LaurentPoly rhs = prod_b + prod_bp;
        e.relation_matches = lhs == rhs;
        if (!e.relation_matches) {
            e.detail = "x*x' = " + lhs.to_string() + " but prod(B) + prod(B') = " +
                       rhs.to_string();
            rep.all_pass = false;
        }
        if (!e.middles_disjoint) rep.all_pass = false;
        rep.edges.push_back(std::move(e));
    }
    return rep;
}

} // namespace clustercat
