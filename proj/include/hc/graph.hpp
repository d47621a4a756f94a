#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

namespace hc {

inline constexpr int kNumStates = 4;

enum class Model { diamond, stick, gun, key };

Model model_from_name(std::string_view name);
std::string_view to_string(Model m);

/// Directed admissibility relation on the four spin states: a configuration
/// is admissible when every ordered nearest-neighbour pair (parent, child)
/// is an edge of this graph.
class AdmissibilityGraph {
public:
    AdmissibilityGraph() = default;

    static AdmissibilityGraph directed(std::initializer_list<std::pair<int, int>> edges);
    /// Closes the edge set under pair reversal.
    static AdmissibilityGraph undirected(std::initializer_list<std::pair<int, int>> edges);

    void add(int i, int j);

    bool contains(int i, int j) const { return (bits_[static_cast<size_t>(i)] >> j) & 1u; }

    int outdegree(int i) const;
    int indegree(int j) const;
    int edge_count() const;

    /// Every state has indegree >= 1 and outdegree >= 1.
    bool has_positive_degrees() const;

    bool operator==(const AdmissibilityGraph&) const = default;

private:
    std::array<std::uint8_t, kNumStates> bits_{};  // bit j of bits_[i] <=> edge (i,j)
};

/// Catalog graphs: diamond is directed as printed; stick/gun/key are
/// symmetric closures of their generating edge lists.
AdmissibilityGraph builtin_graph(Model m);
AdmissibilityGraph builtin_graph(std::string_view name);

} // namespace hc
