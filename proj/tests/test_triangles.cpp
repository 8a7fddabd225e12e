#include "doctest.h"

#include <algorithm>
#include <set>

#include "clustercat/errors.hpp"
#include "clustercat/triangles.hpp"

using namespace clustercat;

namespace {
DynkinType T(const char* s) { return DynkinType::parse(s); }
Orientation alt(const char* s) { return alternating_orientation(T(s)).first; }
}

TEST_CASE("exchange pairs") {
    ClusterCategory a1(alt("A1"));
    int mod = a1.object_of_gamma(simple_root(T("A1"), 0));
    int sp = a1.object_of_gamma(negative_simple(T("A1"), 0));
    CHECK(is_exchange_pair(a1, mod, sp));
    CHECK(!is_exchange_pair(a1, mod, mod));

    // D4 has pairs with ext1_C = 2, which are not exchange pairs.
    ClusterCategory d4(alt("D4"));
    bool found_two = false;
    for (int x = 0; x < d4.num_objects(); ++x)
        for (int y = 0; y < d4.num_objects(); ++y)
            if (d4.ext1_C(x, y) == 2) {
                found_two = true;
                CHECK(!is_exchange_pair(d4, x, y));
            }
    CHECK(found_two);
}

namespace {

// Independent notion of "the slice starting (ending) at u": the sectional
// path closure, truncated by the quiver boundary.
std::vector<int> sectional_closure(const ModuleARQuiver& m, int u, bool forward) {
    auto out = forward ? m.quiver().out_neighbors() : m.quiver().in_neighbors();
    std::vector<int> res{u};
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{u, -1}};
    while (!stack.empty()) {
        auto [w, pred] = stack.back();
        stack.pop_back();
        for (int z : out[w]) {
            int banned = pred < 0 ? -1 : (forward ? m.tau_inverse(pred) : m.tau(pred));
            if (pred >= 0 && z == banned) continue;
            res.push_back(z);
            if (seen.insert({w, z}).second) stack.emplace_back(z, w);
        }
    }
    std::sort(res.begin(), res.end());
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
}

} // namespace

TEST_CASE("frames: type A frames coincide with slices (all of A4)") {
    for (const char* s : {"A2", "A3", "A4"}) {
        ModuleARQuiver m(alt(s));
        HomTables h(m);
        for (int u = 0; u < m.num_modules(); ++u) {
            auto fs = frame(h, u, true);
            CHECK(fs.members == sectional_closure(m, u, true));
            for (int v : fs.members) CHECK(h.hom_mod(u, v) == 1);
            CHECK(std::find(fs.members.begin(), fs.members.end(), u) != fs.members.end());
            auto fe = frame(h, u, false);
            CHECK(fe.members == sectional_closure(m, u, false));
            CHECK(std::find(fe.members.begin(), fe.members.end(), u) != fe.members.end());
        }
    }
    // Non-type-A frames exist and are well defined on D4 (shape recorded
    // in the regression test below).
    ModuleARQuiver d4(alt("D4"));
    HomTables h4(d4);
    for (int u = 0; u < d4.num_modules(); ++u) {
        auto fs = frame(h4, u, true);
        CHECK(!fs.members.empty());
    }
}

TEST_CASE("unique extension middle in A2") {
    Orientation q{T("A2"), {{0, 1}}};
    ModuleARQuiver m(q);
    HomTables h(m);
    int s1 = m.vertex_of(AlmostPositiveRoot{{1, 0}});
    int s2 = m.projective_vertex(1); // S2 = P2 for 1 -> 2
    int p1 = m.projective_vertex(0);
    // Extension of S1 by S2 is P1.
    auto mid = unique_extension_middle(h, s1, s2);
    CHECK(mid == std::vector<int>{p1});
    CHECK_THROWS_AS(unique_extension_middle(h, s2, s1), PreconditionViolated);
}

TEST_CASE("frames-vs-conditions agreement on every valid A4 pair") {
    ModuleARQuiver m(alt("A4"));
    HomTables h(m);
    int valid_pairs = 0;
    for (int a = 0; a < m.num_modules(); ++a)
        for (int b = 0; b < m.num_modules(); ++b) {
            if (h.ext_mod(a, b) != 1) continue;
            ++valid_pairs;
            // unique_extension_middle internally asserts that the frame
            // intersection, the Hom/Ext conditions, dimension additivity
            // and Hom-dimension-one all agree; a throw fails the test.
            auto mid = unique_extension_middle(h, a, b);
            // Middle members are pairwise Hom-orthogonal.
            for (int x : mid)
                for (int y : mid)
                    if (x != y) CHECK(h.hom_mod(x, y) == 0);
        }
    CHECK(valid_pairs > 0);
}

TEST_CASE("A1 exchange triangles are empty") {
    ClusterCategory a1(alt("A1"));
    int mod = a1.object_of_gamma(simple_root(T("A1"), 0));
    int sp = a1.object_of_gamma(negative_simple(T("A1"), 0));
    auto tri = exchange_triangles(a1, mod, sp);
    CHECK(tri.b.empty());
    CHECK(tri.b_prime.empty());
}

TEST_CASE("exchange triangles across types") {
    for (const char* s : {"A2", "A3", "A4", "D4"}) {
        ClusterCategory cc(alt(s));
        auto reports = verify_exchange_edges(cc);
        CHECK(!reports.empty());
        for (auto& rep : reports) {
            CHECK(rep.middles_in_shared);
            // b empty iff m = tau_C m_star; b' empty iff m_star = tau_C m.
            CHECK(rep.b.empty() == (rep.m == cc.tau_C(rep.m_star)));
            CHECK(rep.b_prime.empty() == (rep.m_star == cc.tau_C(rep.m)));
        }
    }
}

TEST_CASE("tau_C equivariance of exchange triangles") {
    ClusterCategory cc(alt("A3"));
    for (int x = 0; x < cc.num_objects(); ++x)
        for (int y = 0; y < cc.num_objects(); ++y) {
            if (!is_exchange_pair(cc, x, y)) continue;
            auto tri = exchange_triangles(cc, x, y);
            auto tri2 = exchange_triangles(cc, cc.tau_C(x), cc.tau_C(y));
            auto shift = [&](ObjectSet v) {
                for (auto& z : v) z = cc.tau_C(z);
                std::sort(v.begin(), v.end());
                return v;
            };
            CHECK(tri2.b == shift(tri.b));
            CHECK(tri2.b_prime == shift(tri.b_prime));
        }
}

TEST_CASE("non-edges fail is_exchange_pair") {
    ClusterCategory cc(alt("A3"));
    auto g = exchange_graph(cc);
    // Pairs of tilting sets sharing fewer than n-1 members give non-pairs.
    const auto& s0 = g.tilting_sets[0];
    for (int x : s0)
        for (int y : s0)
            if (x != y) CHECK(!is_exchange_pair(cc, x, y));
}
