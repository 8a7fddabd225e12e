#ifndef CLUSTERCAT_JSON_IO_HPP
#define CLUSTERCAT_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "clustercat/cluster_algebra.hpp"
#include "clustercat/cluster_category.hpp"
#include "clustercat/tilting.hpp"
#include "clustercat/triangles.hpp"

namespace clustercat {

using nlohmann::json;

json to_json(const AlmostPositiveRoot& r);           // {"coeffs": [...]}
json to_json(const Orientation& q);                  // {"type": "A3", "arrows": [[1,2],...]}
Orientation orientation_from_json(const json& j);
AlmostPositiveRoot root_from_json(const DynkinType& t, const json& j);

// Vertices carry kind-dependent labels; "tau" lists [x, tau(x)] pairs.
json module_quiver_json(const ModuleARQuiver& m);
json cluster_quiver_json(const ClusterCategory& cc);
json window_quiver_json(const ZQWindow& w);

json ext_table_json(const ClusterCategory& cc, int threads = 1); // row-major
json tilting_sets_json(const ClusterCategory& cc, const std::vector<ObjectSet>& sets);
json exchange_graph_json(const ClusterCategory& cc, const ExchangeGraph& g);
json triangle_json(const ClusterCategory& cc, const ExchangeTriangleResult& t);
json seed_json(const Seed& s);
json enumeration_json(const ClusterEnumeration& e);

// DOT exports; deterministic node ordering, gamma labels in Fig. 4
// shorthand. Translation rendered as dashed back-edges on request.
std::string module_quiver_dot(const ModuleARQuiver& m, bool with_tau);
std::string cluster_quiver_dot(const ClusterCategory& cc, bool with_tau);
std::string window_quiver_dot(const ZQWindow& w, bool with_tau);
std::string exchange_graph_dot(const ClusterCategory& cc, const ExchangeGraph& g);
std::string end_quiver_dot(const ClusterCategory& cc, const LinearizedCategory::EndQuiver& eq);

} // namespace clustercat

#endif
