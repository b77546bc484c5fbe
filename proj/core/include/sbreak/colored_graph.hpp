#pragma once

#include <sbreak/program.hpp>

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace sbreak {

using Vertex = std::uint32_t;

enum class OriginKind : std::uint8_t { PosLiteral, NegLiteral, Body, Head };

/// What a vertex stands for: an atom (literal vertices) or a rule index
/// (Body/Head vertices).
struct VertexOrigin {
    OriginKind    kind  = OriginKind::PosLiteral;
    std::uint32_t index = 0;

    friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

/// Ordered partition of the vertex set. Cells are non-empty and each cell is
/// kept sorted by vertex id.
struct Coloring {
    std::vector<std::vector<Vertex>> cells;

    std::size_t size() const { return cells.size(); }
    bool        is_discrete(std::size_t vertex_count) const { return cells.size() == vertex_count; }
    /// True if the cells are disjoint, non-empty, and cover 0..vertex_count-1.
    bool        is_partition_of(std::size_t vertex_count) const;
    /// Cell index per vertex. Requires is_partition_of(vertex_count).
    std::vector<std::uint32_t> cell_index(std::size_t vertex_count) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Undirected, simple, vertex-colored graph.
struct ColoredGraph {
    std::size_t                      vertex_count = 0;
    std::vector<std::vector<Vertex>> adjacency;
    Coloring                         initial_coloring;
    std::vector<VertexOrigin>        origin;
    /// Atoms encoded by literal vertices 0 .. 2*atom_count-1; 0 for graphs
    /// not built from a program.
    AtomId                           atom_count = 0;

    std::size_t edge_count() const;
    bool        has_edge(Vertex u, Vertex v) const;
};

/// Literal vertex ids for atom `a` (atoms are 1-based).
inline Vertex pos_vertex(AtomId a) { return 2 * (a - 1); }
inline Vertex neg_vertex(AtomId a) { return 2 * (a - 1) + 1; }

/// Encodes a program:
///  - two literal vertices per atom joined by an edge,
///  - per non-minimize rule a Body vertex (linked to its body literals) and a
///    Head vertex (linked to its Body vertex and to its head atoms).
/// Colors: positive literals, negative literals, one color per body
/// signature (kind, bound or head count), Head vertices. Atom 1 and every
/// compute-statement atom get singleton colors on both literal vertices.
///
/// Throws UnsupportedFeature on weight rules.
ColoredGraph build_graph(const Program& program);

/// Generic constructor. Edges are deduplicated; self loops are rejected.
ColoredGraph make_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        Coloring coloring);

/// Coarsest equitable refinement of `start`.
Coloring refine(const ColoredGraph& graph, const Coloring& start);

/// Splits the cell containing `v` into {v} followed by the remainder.
/// Throws PreconditionError if `v` is in a singleton cell or absent.
Coloring individualize(const Coloring& coloring, Vertex v);

/// Every two vertices sharing a cell have equal neighbour counts into every cell.
bool is_equitable(const ColoredGraph& graph, const Coloring& coloring);

/// "p edge n m", then "c color v k" per vertex, then "e u v" per edge, all
/// 1-based.
void write_dimacs(const ColoredGraph& graph, std::ostream& out);

} // namespace sbreak
