#include "rppc/crystal_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/reading.hpp"
#include "rppc/rpp_crystal.hpp"

namespace rppc {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

std::vector<int> trimmed(std::vector<int> w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

} // namespace

CrystalGraph build_crystal_graph(const SkewShape& shape, int max_entry) {
    if (max_entry < 1) throw ValidationError("max_entry must be at least 1");
    CrystalGraph g;
    g.shape = shape;
    g.max_entry = max_entry;
    g.vertices = all_rpp(shape, max_entry);

    std::map<std::vector<int>, int> index_of;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        index_of[g.vertices[v].entries()] = v;

    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        for (int i = 1; i < max_entry; ++i) {
            auto lowered = lower_rpp(g.vertices[v], i);
            if (!lowered) continue;
            auto it = index_of.find(lowered->entries());
            if (it == index_of.end())
                throw InternalInvariant("lowering left the vertex set");
            g.edges.push_back({v, it->second, i});
            parent[find_root(parent, v)] = find_root(parent, it->second);
        }
    }

    std::map<int, int> component_index; // root -> dense index, keyed by min vertex
    g.component_of.assign(g.vertices.size(), -1);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        int root = find_root(parent, v);
        auto [it, fresh] = component_index.try_emplace(root, -1);
        if (fresh) {
            it->second = static_cast<int>(g.components.size());
            g.components.emplace_back();
        }
        g.component_of[v] = it->second;
        g.components[it->second].vertices.push_back(v);
    }

    for (CrystalGraph::Component& comp : g.components) {
        int found = -1;
        for (int v : comp.vertices) {
            bool highest = true;
            for (int i = 1; i < max_entry && highest; ++i)
                if (raise_rpp(g.vertices[v], i)) highest = false;
            if (!highest) continue;
            if (found != -1)
                throw InternalInvariant("component has two highest vertices");
            found = v;
        }
        if (found == -1)
            throw InternalInvariant("component has no highest vertex");
        comp.highest = found;
        try {
            comp.weight = Partition(trimmed(g.vertices[found].weight()));
        } catch (const ValidationError&) {
            throw InternalInvariant("highest vertex weight is not a partition");
        }
    }
    return g;
}

namespace {

std::string word_label(const Filling& t) {
    Word w = reading_word(t);
    if (w.empty()) return "()";
    return t.max_entry() <= 9 ? word_to_compact(w) : word_to_string(w);
}

std::string weight_label(const std::vector<int>& w) {
    std::string out = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(w[k]);
    }
    return out + ")";
}

} // namespace

std::string component_summary(const CrystalGraph& g) {
    std::vector<Partition> weights;
    for (const auto& comp : g.components) weights.push_back(comp.weight);
    std::sort(weights.begin(), weights.end(), graded_lex_greater);
    std::ostringstream out;
    out << "components: " << g.components.size() << "; highest weights: ";
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (k) out << ',';
        out << weights[k].to_paren_string();
    }
    return out.str();
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  // shape " << g.shape.to_string() << ", max entry " << g.max_entry
        << "\n";
    out << "  // " << component_summary(g) << "\n";
    out << "  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        const auto& comp = g.components[k];
        out << "  subgraph cluster_" << k << " {\n";
        out << "    label=\"weight " << comp.weight.to_paren_string() << ", size "
            << comp.vertices.size() << "\";\n";
        for (int v : comp.vertices) {
            out << "    v" << v << " [label=\"" << word_label(g.vertices[v])
                << "\\n" << weight_label(g.vertices[v].weight()) << "\"";
            if (v == comp.highest) out << ", peripheries=2";
            out << "];\n";
        }
        out << "  }\n";
    }
    for (const auto& e : g.edges)
        out << "  v" << e.from << " -> v" << e.to << " [label=\"f" << e.color
            << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace rppc
