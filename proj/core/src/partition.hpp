#pragma once

#include <sbreak/colored_graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace sbreak::detail {

/// Ordered partition stored nauty-style: vertices laid out cell by cell in
/// `lab`, each cell named by its start position.
class Partition {
public:
    Partition(const Coloring& coloring, std::size_t vertex_count);

    std::size_t vertex_count() const { return lab_.size(); }
    std::size_t cell_count() const { return cells_; }
    bool        discrete() const { return cells_ == lab_.size(); }

    std::uint32_t cell_of(Vertex v) const { return cell_of_[v]; }
    std::uint32_t cell_size(std::uint32_t start) const { return len_[start]; }
    std::span<const Vertex> cell(std::uint32_t start) const { return {lab_.data() + start, len_[start]}; }
    std::span<const Vertex> lab() const { return lab_; }

    /// Start of the first cell with two or more vertices, or vertex_count().
    std::uint32_t first_nonsingleton() const;

    /// Moves `v` into a singleton cell placed before the rest of its cell.
    /// Returns the start of the singleton.
    std::uint32_t individualize(Vertex v);

    /// Splits cells until equitable, using `splitters` as the initial queue.
    /// Appends an isomorphism-invariant description of every split to `trace`
    /// when given.
    void refine(const ColoredGraph& graph, std::span<const std::uint32_t> splitters,
                std::vector<std::uint32_t>* trace = nullptr);

    /// Refine with every cell as a splitter.
    void refine_all(const ColoredGraph& graph, std::vector<std::uint32_t>* trace = nullptr);

    Coloring to_coloring() const;

private:
    std::vector<Vertex>        lab_;
    std::vector<std::uint32_t> pos_;
    std::vector<std::uint32_t> cell_of_;
    std::vector<std::uint32_t> len_;
    std::size_t                cells_ = 0;
};

} // namespace sbreak::detail
