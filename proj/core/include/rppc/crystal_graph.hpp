#ifndef RPPC_CRYSTAL_GRAPH_HPP
#define RPPC_CRYSTAL_GRAPH_HPP

#include <string>
#include <vector>

#include "rppc/filling.hpp"
#include "rppc/partition.hpp"

namespace rppc {

/* The full operator graph on the reverse plane partitions of one shape:
 * vertices in enumeration order, an edge u -> v of color i whenever the
 * lowering operator at i sends u to v. Components are connected parts of
 * the underlying undirected graph, numbered by their smallest vertex;
 * each holds exactly one vertex killed by every raising operator, whose
 * weight is recorded as a partition.
 */
struct CrystalGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        int color = 0;
    };
    struct Component {
        std::vector<int> vertices; // increasing
        int highest = 0;           // index of the all-raise-zero vertex
        Partition weight;          // its column-content weight
    };

    SkewShape shape;
    int max_entry = 1;
    std::vector<Filling> vertices;
    std::vector<Edge> edges;        // sorted by (from, color)
    std::vector<int> component_of;  // vertex index -> component index
    std::vector<Component> components;
};

CrystalGraph build_crystal_graph(const SkewShape& shape, int max_entry);

// "components: 3; highest weights: (2,2),(2,1),(2)" (weights sorted
// graded-lex descending, one entry per component)
std::string component_summary(const CrystalGraph& g);

/* Graphviz form: one cluster per component, nodes labeled with reading
 * word and weight, edges labeled f<color>. Deterministic ordering.
 */
std::string to_dot(const CrystalGraph& g);

} // namespace rppc

#endif
