#include "partition.hpp"

#include <sbreak/errors.hpp>

#include <algorithm>
#include <deque>

namespace sbreak::detail {

Partition::Partition(const Coloring& coloring, std::size_t vertex_count)
    : pos_(vertex_count), cell_of_(vertex_count), len_(vertex_count, 0) {
    if (!coloring.is_partition_of(vertex_count)) {
        throw PreconditionError("coloring is not a partition of the vertex set");
    }
    lab_.reserve(vertex_count);
    for (const auto& c : coloring.cells) {
        auto start = static_cast<std::uint32_t>(lab_.size());
        len_[start] = static_cast<std::uint32_t>(c.size());
        for (Vertex v : c) {
            pos_[v]     = static_cast<std::uint32_t>(lab_.size());
            cell_of_[v] = start;
            lab_.push_back(v);
        }
    }
    cells_ = coloring.cells.size();
}

std::uint32_t Partition::first_nonsingleton() const {
    std::uint32_t s = 0;
    while (s < lab_.size()) {
        if (len_[s] > 1) {
            return s;
        }
        s += len_[s];
    }
    return static_cast<std::uint32_t>(lab_.size());
}

std::uint32_t Partition::individualize(Vertex v) {
    std::uint32_t start = cell_of_[v];
    std::uint32_t n     = len_[start];
    if (n < 2) {
        throw PreconditionError("cannot individualize a vertex of a singleton cell");
    }
    Vertex other = lab_[start];
    std::swap(lab_[start], lab_[pos_[v]]);
    pos_[other] = pos_[v];
    pos_[v]     = start;
    len_[start] = 1;
    len_[start + 1] = n - 1;
    for (std::uint32_t i = start + 1; i < start + n; ++i) {
        cell_of_[lab_[i]] = start + 1;
    }
    ++cells_;
    return start;
}

void Partition::refine(const ColoredGraph& graph, std::span<const std::uint32_t> splitters,
                       std::vector<std::uint32_t>* trace) {
    const std::size_t           n = lab_.size();
    std::vector<char>           queued(n, 0);
    std::deque<std::uint32_t>   queue;
    std::vector<std::uint32_t>  count(n, 0);
    std::vector<Vertex>         touched;
    std::vector<std::uint32_t>  touched_cells;
    std::vector<Vertex>         splitter;
    for (auto s : splitters) {
        if (!queued[s]) {
            queued[s] = 1;
            queue.push_back(s);
        }
    }

    while (!queue.empty() && cells_ < n) {
        std::uint32_t w = queue.front();
        queue.pop_front();
        queued[w] = 0;
        splitter.assign(lab_.begin() + w, lab_.begin() + w + len_[w]);

        touched.clear();
        for (Vertex x : splitter) {
            for (Vertex y : graph.adjacency[x]) {
                if (count[y]++ == 0) {
                    touched.push_back(y);
                }
            }
        }
        touched_cells.clear();
        for (Vertex y : touched) {
            touched_cells.push_back(cell_of_[y]);
        }
        std::sort(touched_cells.begin(), touched_cells.end());
        touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());

        for (std::uint32_t c : touched_cells) {
            std::uint32_t len = len_[c];
            if (len == 1) {
                continue;
            }
            auto first = lab_.begin() + c;
            auto last  = first + len;
            auto [lo, hi] = std::minmax_element(first, last, [&](Vertex a, Vertex b) { return count[a] < count[b]; });
            if (count[*lo] == count[*hi]) {
                continue;
            }
            std::sort(first, last, [&](Vertex a, Vertex b) {
                return count[a] != count[b] ? count[a] < count[b] : a < b;
            });
            // Fragment boundaries.
            std::vector<std::uint32_t> starts{c};
            for (std::uint32_t i = c + 1; i < c + len; ++i) {
                if (count[lab_[i]] != count[lab_[i - 1]]) {
                    starts.push_back(i);
                }
            }
            starts.push_back(c + len);
            std::size_t largest = 0;
            for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
                std::uint32_t fs = starts[f];
                std::uint32_t fl = starts[f + 1] - fs;
                len_[fs]         = fl;
                for (std::uint32_t i = fs; i < fs + fl; ++i) {
                    pos_[lab_[i]]     = i;
                    cell_of_[lab_[i]] = fs;
                }
                if (fl > starts[largest + 1] - starts[largest]) {
                    largest = f;
                }
                if (trace) {
                    trace->push_back(fs);
                    trace->push_back(fl);
                    trace->push_back(count[lab_[fs]]);
                }
            }
            cells_ += starts.size() - 2;
            const bool was_queued = queued[c] != 0;
            for (std::size_t f = 0; f + 1 < starts.size(); ++f) {
                std::uint32_t fs = starts[f];
                if (queued[fs]) {
                    continue;
                }
                if (!was_queued && f == largest) {
                    continue;
                }
                queued[fs] = 1;
                queue.push_back(fs);
            }
        }
        for (Vertex y : touched) {
            count[y] = 0;
        }
    }
    if (trace) {
        trace->push_back(static_cast<std::uint32_t>(cells_));
    }
}

void Partition::refine_all(const ColoredGraph& graph, std::vector<std::uint32_t>* trace) {
    std::vector<std::uint32_t> all;
    for (std::uint32_t s = 0; s < lab_.size(); s += len_[s]) {
        all.push_back(s);
    }
    refine(graph, all, trace);
}

Coloring Partition::to_coloring() const {
    Coloring out;
    for (std::uint32_t s = 0; s < lab_.size(); s += len_[s]) {
        std::vector<Vertex> cell(lab_.begin() + s, lab_.begin() + s + len_[s]);
        std::sort(cell.begin(), cell.end());
        out.cells.push_back(std::move(cell));
    }
    return out;
}

} // namespace sbreak::detail
