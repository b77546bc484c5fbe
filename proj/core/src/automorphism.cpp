#include "partition.hpp"

#include <sbreak/automorphism.hpp>
#include <sbreak/errors.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace sbreak {

bool is_automorphism(const ColoredGraph& graph, const Permutation& vertex_perm) {
    const auto n = graph.vertex_count;
    for (const auto& [from, to] : vertex_perm.mapping()) {
        if (from >= n || to >= n) {
            return false;
        }
    }
    const auto color = graph.initial_coloring.cell_index(n);
    for (const auto& [from, to] : vertex_perm.mapping()) {
        if (color[from] != color[to] || graph.adjacency[from].size() != graph.adjacency[to].size()) {
            return false;
        }
    }
    // Only edges with a moved endpoint can break; equal degrees plus
    // edges-to-edges on a finite graph gives non-edges-to-non-edges.
    for (const auto& [u, gu] : vertex_perm.mapping()) {
        for (Vertex v : graph.adjacency[u]) {
            if (!graph.has_edge(gu, vertex_perm(v))) {
                return false;
            }
        }
    }
    return true;
}

Permutation atom_restriction(const Permutation& vertex_perm, const ColoredGraph& graph) {
    std::map<Id, Id> m;
    for (AtomId a = 1; a <= graph.atom_count; ++a) {
        Vertex pv = vertex_perm(pos_vertex(a));
        Vertex nv = vertex_perm(neg_vertex(a));
        if (pv % 2 != 0 || pv >= 2 * graph.atom_count || nv != pv + 1) {
            throw InvariantError("literal images of atom " + std::to_string(a) + " are inconsistent");
        }
        AtomId b = pv / 2 + 1;
        if (b != a) {
            m.emplace(a, b);
        }
    }
    return Permutation::from_mapping(std::move(m));
}

std::string format_generators(const GeneratorSet& set) {
    std::ostringstream out;
    for (const auto& g : set.generators) {
        out << to_cycle_string(g) << '\n';
    }
    return out.str();
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x          = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::uint32_t> parent_;
};

std::vector<Vertex> sorted_members(const detail::Partition& p, std::uint32_t start) {
    auto                cell = p.cell(start);
    std::vector<Vertex> out(cell.begin(), cell.end());
    std::sort(out.begin(), out.end());
    return out;
}

class Search {
public:
    Search(const ColoredGraph& graph, const SearchOptions& options)
        : graph_(graph), options_(options), orbits_(graph.vertex_count) {
        if (options.time_budget) {
            deadline_ = std::chrono::steady_clock::now() + *options.time_budget;
        }
    }

    GeneratorSet run() {
        if (options_.limit && *options_.limit == 0) {
            result_.stats.limit_hit = true;
            return std::move(result_);
        }
        detail::Partition root(graph_.initial_coloring, graph_.vertex_count);
        root.refine_all(graph_);
        count_node();
        path_.push_back(std::move(root));

        while (!path_.back().discrete()) {
            if (stop_) {
                return std::move(result_);
            }
            const auto& top     = path_.back();
            std::uint32_t t     = top.first_nonsingleton();
            auto        members = sorted_members(top, t);
            Vertex      v       = members[options_.seed % members.size()];
            detail::Partition next = top;
            std::vector<std::uint32_t> trace;
            auto s = next.individualize(v);
            next.refine(graph_, std::span<const std::uint32_t>(&s, 1), &trace);
            count_node();
            targets_.push_back(t);
            chosen_.push_back(v);
            traces_.push_back(std::move(trace));
            path_.push_back(std::move(next));
        }
        if (stop_) {
            return std::move(result_);
        }
        auto leaf = path_.back().lab();
        first_leaf_.assign(leaf.begin(), leaf.end());

        for (std::size_t level = targets_.size(); level-- > 0 && !stop_;) {
            explore_level(level);
        }
        return std::move(result_);
    }

private:
    void count_node() {
        ++result_.stats.nodes;
        if (options_.node_budget && result_.stats.nodes >= *options_.node_budget) {
            result_.stats.budget_hit = true;
            stop_                    = true;
        }
        if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
            result_.stats.timed_out = true;
            stop_                   = true;
        }
    }

    void explore_level(std::size_t level) {
        const Vertex        base = chosen_[level];
        std::vector<Vertex> failed;
        for (Vertex w : sorted_members(path_[level], targets_[level])) {
            if (stop_) {
                return;
            }
            if (w == base || orbits_.find(w) == orbits_.find(base)) {
                continue;
            }
            if (std::any_of(failed.begin(), failed.end(), [&](Vertex f) { return orbits_.find(f) == orbits_.find(w); })) {
                continue;
            }
            auto gamma = descend(path_[level], level, w);
            if (gamma) {
                accept(*gamma);
            }
            else if (!stop_) {
                failed.push_back(w);
            }
        }
    }

    // Individualizes `w` in a copy of `p` (a partition compatible with the
    // first path at `level`) and searches the subtree for a leaf isomorphic
    // to the first leaf.
    std::optional<Permutation> descend(const detail::Partition& p, std::size_t level, Vertex w) {
        detail::Partition          q = p;
        std::vector<std::uint32_t> trace;
        auto                       s = q.individualize(w);
        q.refine(graph_, std::span<const std::uint32_t>(&s, 1), &trace);
        count_node();
        if (trace != traces_[level]) {
            return std::nullopt;
        }
        if (q.discrete()) {
            return leaf_automorphism(q);
        }
        const std::size_t next = level + 1;
        for (Vertex u : sorted_members(q, targets_[next])) {
            if (stop_) {
                return std::nullopt;
            }
            if (auto gamma = descend(q, next, u)) {
                return gamma;
            }
        }
        return std::nullopt;
    }

    std::optional<Permutation> leaf_automorphism(const detail::Partition& leaf) const {
        std::vector<Id> image(graph_.vertex_count);
        auto            lab = leaf.lab();
        for (std::size_t i = 0; i < first_leaf_.size(); ++i) {
            image[first_leaf_[i]] = lab[i];
        }
        auto gamma = Permutation::from_dense(image);
        if (gamma.is_identity() || !is_automorphism(graph_, gamma)) {
            return std::nullopt;
        }
        return gamma;
    }

    void accept(const Permutation& gamma) {
        for (const auto& [from, to] : gamma.mapping()) {
            orbits_.unite(from, to);
        }
        Permutation atoms = graph_.atom_count ? atom_restriction(gamma, graph_) : gamma;
        if (atoms.is_identity() || !seen_.insert(atoms).second) {
            return;
        }
        result_.generators.push_back(std::move(atoms));
        result_.graph_generators.push_back(gamma);
        result_.stats.generators_found = result_.generators.size();
        if (options_.limit && result_.generators.size() >= *options_.limit) {
            result_.stats.limit_hit = true;
            stop_                   = true;
        }
    }

    const ColoredGraph&                                  graph_;
    SearchOptions                                        options_;
    GeneratorSet                                         result_;
    UnionFind                                            orbits_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool                                                 stop_ = false;

    std::vector<detail::Partition>          path_;
    std::vector<std::uint32_t>              targets_;
    std::vector<Vertex>                     chosen_;
    std::vector<std::vector<std::uint32_t>> traces_;
    std::vector<Vertex>                     first_leaf_;
    std::set<Permutation>                   seen_;
};

} // namespace

GeneratorSet find_generators(const ColoredGraph& graph, const SearchOptions& options) {
    return Search(graph, options).run();
}

} // namespace sbreak
