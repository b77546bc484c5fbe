#pragma once

#include <sbreak/colored_graph.hpp>
#include <sbreak/permutation.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sbreak {

struct SearchOptions {
    /// Maximum number of (atom-level) generators to return.
    std::optional<std::size_t> limit;
    /// Picks which member of a target cell the first path individualizes.
    std::uint64_t seed = 0;
    /// Abort after this many refinement nodes.
    std::optional<std::uint64_t> node_budget;
    /// Abort after this much wall time.
    std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchStats {
    std::uint64_t nodes            = 0;
    std::size_t   generators_found = 0;
    bool          limit_hit        = false;
    bool          budget_hit       = false;
    bool          timed_out        = false;
};

/// Generators of the color-preserving automorphism group.
///
/// `graph_generators[i]` is the vertex permutation that `generators[i]` was
/// read from. Every entry was checked against the graph before inclusion;
/// no entry is the identity and none repeats.
struct GeneratorSet {
    std::vector<Permutation> generators;
    std::vector<Permutation> graph_generators;
    SearchStats              stats;

    bool empty() const { return generators.empty(); }
    std::size_t size() const { return generators.size(); }
};

/// Individualization-refinement search with orbit pruning.
///
/// The first discrete leaf is the base; every later leaf with a matching
/// refinement trace is mapped onto it and kept if the mapping is an
/// automorphism. Deterministic for fixed inputs; with a limit the result is
/// a prefix of the unlimited result.
GeneratorSet find_generators(const ColoredGraph& graph, const SearchOptions& options = {});

/// Reads the atom permutation off the literal vertices of a program graph.
/// Throws InvariantError if positive and negative images disagree.
Permutation atom_restriction(const Permutation& vertex_perm, const ColoredGraph& graph);

/// Preserves the initial coloring and maps edges to edges.
bool is_automorphism(const ColoredGraph& graph, const Permutation& vertex_perm);

/// One generator per line in cycle notation over raw ids.
std::string format_generators(const GeneratorSet& set);

} // namespace sbreak
