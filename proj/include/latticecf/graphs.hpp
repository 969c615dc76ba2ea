#pragma once

// Weighted dual graphs of curve configurations on surfaces.
//
// Loop convention: a loop at vertex i adds 2 to its valency but contributes
// nothing to the intersection matrix; the weight already is E_i . E_i.

#include "latticecf/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latticecf {

struct GraphVertex {
    Integer genus = 0;
    Integer weight = 0;
    std::optional<std::string> label;

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;
using IntMatrix = std::vector<IntSeq>;

class WeightedDualGraph {
public:
    // Throws DomainError on a negative genus or a duplicate label.
    std::size_t add_vertex(Integer weight, Integer genus = 0, std::optional<std::string> label = std::nullopt);
    // Throws UnknownVertex.
    void add_edge(std::size_t i, std::size_t j);
    void add_arrow(std::size_t v);

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
    const GraphVertex& vertex(std::size_t v) const;
    // Normalized (i <= j), sorted.
    std::vector<Edge> edges() const;
    // Sorted.
    std::vector<std::size_t> arrows() const;

    std::size_t valency(std::size_t v) const;
    std::optional<std::size_t> find_label(const std::string& label) const;
    bool connected() const;

    // Same vertices and edges, arrows dropped.
    WeightedDualGraph without_arrows() const;

    friend bool operator==(const WeightedDualGraph& a, const WeightedDualGraph& b);

private:
    void check(std::size_t v) const;

    std::vector<GraphVertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> arrows_;
};

IntMatrix intersection_matrix(const WeightedDualGraph& g);

// Negative definiteness by the signs of the leading principal minors.
bool is_contractible(const WeightedDualGraph& g);

// Leading principal minors d_1..d_n of a symmetric matrix, fraction-free.
IntSeq leading_minors(const IntMatrix& m);

// Minimal nonzero cycle Z with Z.E_k <= 0 for all k.
// Throws Disconnected, NotContractible.
IntSeq fundamental_cycle(const WeightedDualGraph& g);

// weight - valency. Throws UnknownVertex.
Integer euler_normalized(const WeightedDualGraph& g, std::size_t v);

WeightedDualGraph chain(const IntSeq& weights);
WeightedDualGraph cycle_graph(const IntSeq& weights);

std::string to_dot(const WeightedDualGraph& g);

// {"schema", "vertices":[{id,genus,weight,label}], "edges":[[i,j]], "arrows":[i]}.
// Integers outside the signed 64-bit range are written as decimal strings.
std::string to_json(const WeightedDualGraph& g);
// Throws ParseError.
WeightedDualGraph graph_from_json(const std::string& text);

inline constexpr const char* json_schema = "lattice-cf/1";

} // namespace latticecf
