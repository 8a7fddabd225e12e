#include "clustercat/translation_quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace clustercat {

bool TranslationQuiver::has_arrow(int s, int t) const {
    for (auto& a : arrows)
        if (a.first == s && a.second == t) return true;
    return false;
}

std::vector<std::vector<int>> TranslationQuiver::out_neighbors() const {
    std::vector<std::vector<int>> out(num_vertices);
    for (auto& a : arrows) out[a.first].push_back(a.second);
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

std::vector<std::vector<int>> TranslationQuiver::in_neighbors() const {
    std::vector<std::vector<int>> in(num_vertices);
    for (auto& a : arrows) in[a.second].push_back(a.first);
    for (auto& v : in) std::sort(v.begin(), v.end());
    return in;
}

std::vector<int> TranslationQuiver::tau_inverse() const {
    std::vector<int> inv(num_vertices, -1);
    for (int v = 0; v < num_vertices; ++v)
        if (tau[v] >= 0) inv[tau[v]] = v;
    return inv;
}

std::vector<int> TranslationQuiver::mesh_middle(int y) const {
    std::vector<int> mid;
    for (auto& a : arrows)
        if (a.second == y) mid.push_back(a.first);
    std::sort(mid.begin(), mid.end());
    return mid;
}

std::vector<int> TranslationQuiver::topological_order() const {
    std::vector<int> indeg(num_vertices, 0);
    for (auto& a : arrows) ++indeg[a.second];
    auto out = out_neighbors();
    // Min-id first for determinism.
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < num_vertices; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != num_vertices)
        throw std::logic_error("topological_order: quiver has an oriented cycle");
    return order;
}

void validate_translation_quiver(const TranslationQuiver& tq) {
    std::set<std::pair<int, int>> seen;
    for (auto& a : tq.arrows) {
        if (a.first < 0 || a.first >= tq.num_vertices || a.second < 0 ||
            a.second >= tq.num_vertices)
            throw std::logic_error("arrow endpoint out of range");
        if (a.first == a.second) throw std::logic_error("translation quiver has a loop");
        if (!seen.insert(a).second) throw std::logic_error("multiple arrow");
    }
    if (static_cast<int>(tq.tau.size()) != tq.num_vertices)
        throw std::logic_error("tau has wrong size");
    auto in = tq.in_neighbors();
    auto out = tq.out_neighbors();
    for (int x = 0; x < tq.num_vertices; ++x) {
        int tx = tq.tau[x];
        if (tx < 0) continue;
        if (tx >= tq.num_vertices) throw std::logic_error("tau out of range");
        if (in[x] != out[tx]) throw std::logic_error("x^- != tau(x)^+ at a vertex");
        // sigma: arrows into x <-> arrows out of tau(x); with x^- = tau(x)^+
        // and no multiple arrows this is automatic, but keep the count check.
        if (in[x].size() != out[tx].size()) throw std::logic_error("polarization not bijective");
    }
}

} // namespace clustercat
