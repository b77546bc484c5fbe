#include "partition.hpp"

#include <sbreak/colored_graph.hpp>
#include <sbreak/errors.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace sbreak {

bool Coloring::is_partition_of(std::size_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    std::size_t       total = 0;
    for (const auto& c : cells) {
        if (c.empty()) {
            return false;
        }
        for (Vertex v : c) {
            if (v >= vertex_count || seen[v]) {
                return false;
            }
            seen[v] = 1;
            ++total;
        }
    }
    return total == vertex_count;
}

std::vector<std::uint32_t> Coloring::cell_index(std::size_t vertex_count) const {
    std::vector<std::uint32_t> idx(vertex_count, 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (Vertex v : cells[i]) {
            idx[v] = static_cast<std::uint32_t>(i);
        }
    }
    return idx;
}

std::size_t ColoredGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency) {
        twice += a.size();
    }
    return twice / 2;
}

bool ColoredGraph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

ColoredGraph make_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        Coloring coloring) {
    if (!coloring.is_partition_of(vertex_count)) {
        throw PreconditionError("coloring is not a partition of the vertex set");
    }
    ColoredGraph g;
    g.vertex_count = vertex_count;
    g.adjacency.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw PreconditionError("edge endpoint out of range");
        }
        if (u == v) {
            throw PreconditionError("self loops are not allowed");
        }
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    for (auto& c : coloring.cells) {
        std::sort(c.begin(), c.end());
    }
    g.initial_coloring = std::move(coloring);
    g.origin.assign(vertex_count, VertexOrigin{});
    return g;
}

namespace {

// (kind rank, pinned, rule kind code, bound or head count, pinned atom)
using ColorKey = std::tuple<int, int, int, std::uint32_t, AtomId>;

std::pair<int, std::uint32_t> body_signature(const Rule& r) {
    switch (r.kind) {
        case RuleKind::Basic      : return {0, 0};
        case RuleKind::Cardinality: return {1, r.bound};
        case RuleKind::Choice     : return {2, static_cast<std::uint32_t>(r.heads.size())};
        default                   : return {3, 0};
    }
}

} // namespace

ColoredGraph build_graph(const Program& program) {
    if (program.has_weight_rules()) {
        throw UnsupportedFeature("weight rules are not supported by symmetry detection");
    }
    validate(program);

    std::set<AtomId> pinned{false_atom};
    pinned.insert(program.compute_true.begin(), program.compute_true.end());
    pinned.insert(program.compute_false.begin(), program.compute_false.end());

    const std::size_t atom_vertices = 2 * static_cast<std::size_t>(program.max_atom);
    std::size_t       rule_count    = 0;
    for (const auto& r : program.rules) {
        rule_count += r.kind != RuleKind::Minimize;
    }

    ColoredGraph g;
    g.vertex_count = atom_vertices + 2 * rule_count;
    g.atom_count   = program.max_atom;
    g.adjacency.resize(g.vertex_count);
    g.origin.resize(g.vertex_count);
    std::vector<ColorKey> key(g.vertex_count);

    auto link = [&](Vertex u, Vertex v) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    };

    for (AtomId a = 1; a <= program.max_atom; ++a) {
        const bool pin     = pinned.contains(a);
        const AtomId tag   = pin ? a : 0;
        g.origin[pos_vertex(a)] = {OriginKind::PosLiteral, a};
        g.origin[neg_vertex(a)] = {OriginKind::NegLiteral, a};
        key[pos_vertex(a)]      = {0, pin, 0, 0, tag};
        key[neg_vertex(a)]      = {1, pin, 0, 0, tag};
        link(pos_vertex(a), neg_vertex(a));
    }

    auto next = static_cast<Vertex>(atom_vertices);
    for (std::uint32_t ri = 0; ri < program.rules.size(); ++ri) {
        const Rule& r = program.rules[ri];
        if (r.kind == RuleKind::Minimize) {
            continue;
        }
        Vertex body = next++;
        Vertex head = next++;
        g.origin[body] = {OriginKind::Body, ri};
        g.origin[head] = {OriginKind::Head, ri};
        auto [code, param] = body_signature(r);
        key[body]          = {2, 0, code, param, 0};
        key[head]          = {3, 0, 0, 0, 0};
        for (const auto& l : r.body) {
            link(body, l.negated ? neg_vertex(l.atom) : pos_vertex(l.atom));
        }
        link(body, head);
        for (AtomId h : r.heads) {
            link(head, pos_vertex(h));
        }
    }
    for (auto& a : g.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::map<ColorKey, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        groups[key[v]].push_back(v);
    }
    std::vector<std::pair<ColorKey, std::vector<Vertex>>> ordered(groups.begin(), groups.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        auto [xr, xp, xc, xb, xa] = x.first;
        auto [yr, yp, yc, yb, ya] = y.first;
        return std::tie(xr, xp, xc, xb, x.second.front()) < std::tie(yr, yp, yc, yb, y.second.front());
    });
    for (auto& [k, cell] : ordered) {
        g.initial_coloring.cells.push_back(std::move(cell));
    }
    return g;
}

Coloring refine(const ColoredGraph& graph, const Coloring& start) {
    detail::Partition p(start, graph.vertex_count);
    p.refine_all(graph);
    return p.to_coloring();
}

Coloring individualize(const Coloring& coloring, Vertex v) {
    Coloring out;
    bool     found = false;
    for (const auto& cell : coloring.cells) {
        if (std::find(cell.begin(), cell.end(), v) == cell.end()) {
            out.cells.push_back(cell);
            continue;
        }
        if (cell.size() < 2) {
            throw PreconditionError("vertex " + std::to_string(v) + " is already in a singleton cell");
        }
        found = true;
        out.cells.push_back({v});
        std::vector<Vertex> rest;
        std::copy_if(cell.begin(), cell.end(), std::back_inserter(rest), [v](Vertex u) { return u != v; });
        out.cells.push_back(std::move(rest));
    }
    if (!found) {
        throw PreconditionError("vertex " + std::to_string(v) + " is not colored");
    }
    return out;
}

bool is_equitable(const ColoredGraph& graph, const Coloring& coloring) {
    if (!coloring.is_partition_of(graph.vertex_count)) {
        return false;
    }
    const auto idx = coloring.cell_index(graph.vertex_count);
    auto counts    = [&](Vertex u) {
        std::vector<std::uint32_t> c(coloring.size(), 0);
        for (Vertex w : graph.adjacency[u]) {
            ++c[idx[w]];
        }
        return c;
    };
    for (const auto& cell : coloring.cells) {
        const auto ref = counts(cell.front());
        for (std::size_t i = 1; i < cell.size(); ++i) {
            if (counts(cell[i]) != ref) {
                return false;
            }
        }
    }
    return true;
}

void write_dimacs(const ColoredGraph& graph, std::ostream& out) {
    out << "p edge " << graph.vertex_count << ' ' << graph.edge_count() << '\n';
    const auto idx = graph.initial_coloring.cell_index(graph.vertex_count);
    for (Vertex v = 0; v < graph.vertex_count; ++v) {
        out << "c color " << v + 1 << ' ' << idx[v] << '\n';
    }
    for (Vertex u = 0; u < graph.vertex_count; ++u) {
        for (Vertex v : graph.adjacency[u]) {
            if (u < v) {
                out << "e " << u + 1 << ' ' << v + 1 << '\n';
            }
        }
    }
}

} // namespace sbreak
