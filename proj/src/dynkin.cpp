#include "clustercat/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "clustercat/errors.hpp"

namespace clustercat {

std::string DynkinType::name() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& text) {
    if (text.size() < 2)
        throw UsageError("bad Dynkin type '" + text + "' (expected e.g. A3, D4, E6)");
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (s != 'A' && s != 'D' && s != 'E')
        throw UsageError("bad Dynkin series '" + text + "' (one of A, D, E)");
    int rank = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw UsageError("bad Dynkin rank in '" + text + "'");
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000)
            throw UsageError("bad Dynkin rank in '" + text + "'");
    }
    DynkinType t{static_cast<Series>(s), rank};
    require_valid(t);
    return t;
}

bool is_valid(const DynkinType& t) {
    switch (t.series) {
    case Series::A: return t.rank >= 1;
    case Series::D: return t.rank >= 4;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    }
    return false;
}

void require_valid(const DynkinType& t) {
    if (!is_valid(t))
        throw UsageError("invalid Dynkin type " + t.name() +
                         " (need A n>=1, D n>=4, E n in {6,7,8})");
}

std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
    require_valid(t);
    std::vector<std::pair<int, int>> e;
    const int n = t.rank;
    switch (t.series) {
    case Series::A:
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    case Series::D:
        for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 3, n - 2);
        e.emplace_back(n - 3, n - 1);
        break;
    case Series::E:
        // Bourbaki: 1-3-4-5-6(-7)(-8) is a path, 2 hangs off 4.
        e.emplace_back(0, 2);
        for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(1, 3);
        std::sort(e.begin(), e.end());
        break;
    }
    return e;
}

int positive_root_count(const DynkinType& t) {
    require_valid(t);
    switch (t.series) {
    case Series::A: return t.rank * (t.rank + 1) / 2;
    case Series::D: return t.rank * (t.rank - 1);
    case Series::E:
        return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    }
    return 0;
}

CoxeterData coxeter_data(const DynkinType& t) {
    require_valid(t);
    int h = 0;
    switch (t.series) {
    case Series::A: h = t.rank + 1; break;
    case Series::D: h = 2 * t.rank - 2; break;
    case Series::E: h = t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30); break;
    }
    return CoxeterData{h, h - 1};
}

std::vector<int> weyl_degrees(const DynkinType& t) {
    require_valid(t);
    std::vector<int> d;
    switch (t.series) {
    case Series::A:
        for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
        break;
    case Series::D:
        for (int i = 2; i <= 2 * t.rank - 2; i += 2) d.push_back(i);
        d.push_back(t.rank);
        break;
    case Series::E:
        if (t.rank == 6) d = {2, 5, 6, 8, 9, 12};
        else if (t.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::int64_t cluster_count_formula(const DynkinType& t) {
    const auto deg = weyl_degrees(t);
    const int h = coxeter_data(t).h;
    // prod (d_i + h) / d_i computed as an exact integer product/quotient.
    std::int64_t num = 1, den = 1;
    for (int d : deg) {
        num *= d + h;
        den *= d;
        std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

bool AlmostPositiveRoot::is_negative_simple() const {
    return negative_simple_index() >= 0;
}

int AlmostPositiveRoot::negative_simple_index() const {
    int idx = -1;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (coeffs[i] != -1 || idx >= 0) return -1;
        idx = static_cast<int>(i);
    }
    return idx;
}

bool AlmostPositiveRoot::is_positive() const {
    bool nonzero = false;
    for (int c : coeffs) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

int AlmostPositiveRoot::height() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

std::strong_ordering AlmostPositiveRoot::operator<=>(const AlmostPositiveRoot& o) const {
    if (auto c = height() <=> o.height(); c != 0) return c;
    return coeffs <=> o.coeffs;
}

AlmostPositiveRoot negative_simple(const DynkinType& t, int i) {
    AlmostPositiveRoot r{std::vector<int>(t.rank, 0)};
    r.coeffs[i] = -1;
    return r;
}

AlmostPositiveRoot simple_root(const DynkinType& t, int i) {
    AlmostPositiveRoot r{std::vector<int>(t.rank, 0)};
    r.coeffs[i] = 1;
    return r;
}

std::string root_label(const AlmostPositiveRoot& r) {
    int neg = r.negative_simple_index();
    if (neg >= 0) return "-" + std::to_string(neg + 1);
    bool zero_one = true;
    for (int c : r.coeffs)
        if (c != 0 && c != 1) zero_one = false;
    std::ostringstream os;
    if (zero_one) {
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            if (r.coeffs[i]) os << (i + 1);
    } else {
        os << '[';
        for (size_t i = 0; i < r.coeffs.size(); ++i) {
            if (i) os << ',';
            os << r.coeffs[i];
        }
        os << ']';
    }
    return os.str();
}

AlmostPositiveRoot parse_root_label(const DynkinType& t, const std::string& s) {
    require_valid(t);
    const int n = t.rank;
    if (s.empty()) throw UsageError("empty root label");
    AlmostPositiveRoot r{std::vector<int>(n, 0)};
    if (s[0] == '-') {
        int i = 0;
        try {
            i = std::stoi(s.substr(1));
        } catch (...) {
            throw UsageError("bad root label '" + s + "'");
        }
        if (i < 1 || i > n) throw UsageError("vertex out of range in '" + s + "'");
        r.coeffs[i - 1] = -1;
        return r;
    }
    if (s[0] == '[') {
        if (s.back() != ']') throw UsageError("bad root label '" + s + "'");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',')) {
            if (i >= n) throw UsageError("too many coefficients in '" + s + "'");
            try {
                r.coeffs[i++] = std::stoi(tok);
            } catch (...) {
                throw UsageError("bad coefficient in '" + s + "'");
            }
        }
        if (i != n) throw UsageError("expected " + std::to_string(n) + " coefficients in '" + s + "'");
        return r;
    }
    if (n > 9)
        throw UsageError("digit-string labels are ambiguous for rank > 9; use [c1,...,cn]");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw UsageError("bad root label '" + s + "'");
        int i = c - '0';
        if (i < 1 || i > n) throw UsageError("vertex out of range in '" + s + "'");
        if (r.coeffs[i - 1]) throw UsageError("repeated vertex in '" + s + "'");
        r.coeffs[i - 1] = 1;
    }
    return r;
}

int Orientation::arrow_count(int i, int j) const {
    int c = 0;
    for (auto& a : arrows)
        if (a.first == i && a.second == j) ++c;
    return c;
}

void require_valid(const Orientation& q) {
    require_valid(q.type);
    auto edges = diagram_edges(q.type);
    std::set<std::pair<int, int>> want(edges.begin(), edges.end());
    std::set<std::pair<int, int>> seen;
    for (auto [s, t] : q.arrows) {
        if (s == t) throw UsageError("orientation has a loop at vertex " + std::to_string(s + 1));
        auto e = std::minmax(s, t);
        std::pair<int, int> key{e.first, e.second};
        if (!want.count(key))
            throw UsageError("arrow " + std::to_string(s + 1) + "->" + std::to_string(t + 1) +
                             " is not an edge of " + q.type.name());
        if (!seen.insert(key).second)
            throw UsageError("edge oriented twice: " + std::to_string(s + 1) + "-" +
                             std::to_string(t + 1));
    }
    if (seen.size() != want.size())
        throw UsageError("orientation of " + q.type.name() + " must orient every edge exactly once");
}

void require_valid(const DynkinType& t, const Bipartition& b) {
    require_valid(t);
    std::vector<int> color(t.rank, -1);
    for (int v : b.minus) {
        if (v < 0 || v >= t.rank || color[v] != -1) throw UsageError("bad bipartition");
        color[v] = 0;
    }
    for (int v : b.plus) {
        if (v < 0 || v >= t.rank || color[v] != -1) throw UsageError("bad bipartition");
        color[v] = 1;
    }
    for (int v = 0; v < t.rank; ++v)
        if (color[v] == -1) throw UsageError("bipartition misses vertex " + std::to_string(v + 1));
    for (auto [u, v] : diagram_edges(t))
        if (color[u] == color[v])
            throw UsageError("bipartition part contains the edge " + std::to_string(u + 1) + "-" +
                             std::to_string(v + 1));
}

std::pair<Orientation, Bipartition> alternating_orientation(const DynkinType& t) {
    require_valid(t);
    auto edges = diagram_edges(t);
    std::vector<std::vector<int>> adj(t.rank);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> dist(t.rank, -1);
    std::queue<int> bfs;
    bfs.push(0);
    dist[0] = 0;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                bfs.push(v);
            }
    }
    Bipartition bip;
    for (int v = 0; v < t.rank; ++v)
        (dist[v] % 2 == 0 ? bip.minus : bip.plus).push_back(v);
    Orientation q{t, {}};
    for (auto [u, v] : edges) {
        if (dist[u] % 2 == 0)
            q.arrows.emplace_back(u, v); // I^- -> I^+
        else
            q.arrows.emplace_back(v, u);
    }
    return {q, bip};
}

RootSystem::RootSystem(DynkinType t) : type_(t) {
    require_valid(t);
    const int n = t.rank;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    for (auto [u, v] : diagram_edges(t)) {
        cartan_[u][v] = -1;
        cartan_[v][u] = -1;
    }
    // Close the simples under simple reflections, keeping positive vectors.
    std::set<std::vector<int>> seen;
    std::vector<AlmostPositiveRoot> frontier;
    for (int i = 0; i < n; ++i) {
        auto r = simple_root(t, i);
        seen.insert(r.coeffs);
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<AlmostPositiveRoot> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < n; ++i) {
                auto s = reflect(i, r);
                if (s.is_positive() && seen.insert(s.coeffs).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& c : seen) positive_.push_back(AlmostPositiveRoot{c});
    std::sort(positive_.begin(), positive_.end());
    for (int i = 0; i < n; ++i) almost_.push_back(negative_simple(t, i));
    almost_.insert(almost_.end(), positive_.begin(), positive_.end());
    std::sort(almost_.begin(), almost_.end());
}

bool RootSystem::is_positive_root(const AlmostPositiveRoot& r) const {
    return r.is_positive() && index_of(r) >= 0;
}

bool RootSystem::is_almost_positive(const AlmostPositiveRoot& r) const {
    return index_of(r) >= 0;
}

int RootSystem::index_of(const AlmostPositiveRoot& r) const {
    auto it = std::lower_bound(almost_.begin(), almost_.end(), r);
    if (it == almost_.end() || !(*it == r)) return -1;
    return static_cast<int>(it - almost_.begin());
}

AlmostPositiveRoot RootSystem::reflect(int i, const AlmostPositiveRoot& r) const {
    long pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += static_cast<long>(cartan_[i][j]) * r.coeffs[j];
    AlmostPositiveRoot out = r;
    out.coeffs[i] -= static_cast<int>(pairing);
    return out;
}

AlmostPositiveRoot RootSystem::sigma(int i, const AlmostPositiveRoot& r) const {
    int neg = r.negative_simple_index();
    if (neg >= 0 && neg != i) return r;
    return reflect(i, r);
}

AlmostPositiveRoot RootSystem::tau_pm(bool plus, const AlmostPositiveRoot& r,
                                      const Bipartition& b) const {
    AlmostPositiveRoot out = r;
    for (int i : plus ? b.plus : b.minus) out = sigma(i, out);
    return out;
}

int RootSystem::compatibility_degree(const AlmostPositiveRoot& a, const AlmostPositiveRoot& b,
                                     const Bipartition& bip) const {
    if (a == b) return 0; // Ext^1_C(X, X) = 0 for exceptional indecomposables
    AlmostPositiveRoot x = a, y = b;
    const int cap = 2 * (coxeter_data(type_).h + 2);
    for (int step = 0; step <= cap; ++step) {
        int i = x.negative_simple_index();
        if (i >= 0) {
            int c = y.coeffs[i];
            if (c < 0)
                throw NoReduction("base case hit a negative coefficient for distinct arguments");
            return c;
        }
        bool plus = (step % 2 == 0); // tau_+ first, then tau_-
        x = tau_pm(plus, x, bip);
        y = tau_pm(plus, y, bip);
    }
    throw NoReduction("compatibility degree did not reduce within 2*(h+2) alternations");
}

long euler_form(const std::vector<int>& d, const std::vector<int>& e, const Orientation& q) {
    long v = 0;
    for (size_t i = 0; i < d.size(); ++i) v += static_cast<long>(d[i]) * e[i];
    for (auto [s, t] : q.arrows) v -= static_cast<long>(d[s]) * e[t];
    return v;
}

} // namespace clustercat
