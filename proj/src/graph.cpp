#include "hc/graph.hpp"

#include <bit>

#include "hc/errors.hpp"

namespace hc {

Model model_from_name(std::string_view name) {
    if (name == "diamond") return Model::diamond;
    if (name == "stick") return Model::stick;
    if (name == "gun") return Model::gun;
    if (name == "key") return Model::key;
    throw CatalogError("unknown model '" + std::string(name) +
                       "' (expected diamond, stick, gun or key)");
}

std::string_view to_string(Model m) {
    switch (m) {
        case Model::diamond: return "diamond";
        case Model::stick: return "stick";
        case Model::gun: return "gun";
        case Model::key: return "key";
    }
    return "?";
}

void AdmissibilityGraph::add(int i, int j) {
    if (i < 0 || i >= kNumStates || j < 0 || j >= kNumStates)
        throw ParameterError("admissibility edge outside state set {0,1,2,3}");
    bits_[static_cast<size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
}

AdmissibilityGraph AdmissibilityGraph::directed(std::initializer_list<std::pair<int, int>> edges) {
    AdmissibilityGraph g;
    for (auto [i, j] : edges) g.add(i, j);
    return g;
}

AdmissibilityGraph AdmissibilityGraph::undirected(std::initializer_list<std::pair<int, int>> edges) {
    AdmissibilityGraph g;
    for (auto [i, j] : edges) {
        g.add(i, j);
        g.add(j, i);
    }
    return g;
}

int AdmissibilityGraph::outdegree(int i) const {
    return std::popcount(bits_[static_cast<size_t>(i)]);
}

int AdmissibilityGraph::indegree(int j) const {
    int n = 0;
    for (int i = 0; i < kNumStates; ++i) n += contains(i, j) ? 1 : 0;
    return n;
}

int AdmissibilityGraph::edge_count() const {
    int n = 0;
    for (int i = 0; i < kNumStates; ++i) n += outdegree(i);
    return n;
}

bool AdmissibilityGraph::has_positive_degrees() const {
    for (int v = 0; v < kNumStates; ++v)
        if (outdegree(v) == 0 || indegree(v) == 0) return false;
    return true;
}

AdmissibilityGraph builtin_graph(Model m) {
    switch (m) {
        case Model::diamond:
            return AdmissibilityGraph::directed(
                {{0, 0}, {0, 2}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 3}});
        case Model::stick:
            return AdmissibilityGraph::undirected({{0, 1}, {0, 3}, {2, 3}});
        case Model::gun:
            return AdmissibilityGraph::undirected({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}});
        case Model::key:
            return AdmissibilityGraph::undirected({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    }
    throw CatalogError("unknown model enum value");
}

AdmissibilityGraph builtin_graph(std::string_view name) {
    return builtin_graph(model_from_name(name));
}

} // namespace hc
