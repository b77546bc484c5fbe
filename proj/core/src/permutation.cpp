#include <sbreak/errors.hpp>
#include <sbreak/permutation.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace sbreak {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MalformedNumber        : return "malformed number";
        case ParseErrorKind::Truncated              : return "truncated input";
        case ParseErrorKind::UnknownRuleType        : return "unknown rule type";
        case ParseErrorKind::NegativeExceedsLiterals: return "negative count exceeds literal count";
        case ParseErrorKind::InvalidAtom            : return "invalid atom";
        case ParseErrorKind::MissingComputeHeader   : return "missing compute header";
        case ParseErrorKind::DuplicateSymbol        : return "duplicate symbol";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t token_index, const std::string& detail)
    : Error("token " + std::to_string(token_index) + ": " + to_string(kind) + (detail.empty() ? "" : " (" + detail + ")"))
    , kind_(kind)
    , token_index_(token_index) {}

UnsupportedGenerator::UnsupportedGenerator(std::size_t generator_index, const std::string& detail)
    : Error("generator " + std::to_string(generator_index) + ": " + detail)
    , index_(generator_index) {}

Permutation Permutation::from_cycles(const std::vector<std::vector<Id>>& cycles) {
    Permutation p;
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Id from = cycle[i];
            Id to   = cycle[(i + 1) % cycle.size()];
            if (!p.map_.emplace(from, to).second) {
                throw PreconditionError("cycles are not disjoint at " + std::to_string(from));
            }
        }
    }
    std::erase_if(p.map_, [](const auto& kv) { return kv.first == kv.second; });
    return p;
}

Permutation Permutation::from_cycles(std::initializer_list<std::initializer_list<Id>> cycles) {
    std::vector<std::vector<Id>> c;
    for (auto cycle : cycles) {
        c.emplace_back(cycle);
    }
    return from_cycles(c);
}

Permutation Permutation::from_dense(std::span<const Id> image, Id offset) {
    std::vector<bool> seen(image.size(), false);
    Permutation       p;
    for (std::size_t i = 0; i < image.size(); ++i) {
        Id to = image[i];
        if (to < offset || to - offset >= image.size() || seen[to - offset]) {
            throw PreconditionError("dense image is not a permutation");
        }
        seen[to - offset] = true;
        Id from           = offset + static_cast<Id>(i);
        if (from != to) {
            p.map_.emplace_hint(p.map_.end(), from, to);
        }
    }
    return p;
}

Permutation Permutation::from_mapping(std::map<Id, Id> mapping) {
    std::erase_if(mapping, [](const auto& kv) { return kv.first == kv.second; });
    std::set<Id> image;
    for (const auto& [from, to] : mapping) {
        if (!image.insert(to).second || !mapping.contains(to)) {
            throw PreconditionError("mapping is not a bijection on its domain");
        }
    }
    Permutation p;
    p.map_ = std::move(mapping);
    return p;
}

std::vector<std::vector<Id>> Permutation::cycles() const {
    std::vector<std::vector<Id>> out;
    std::set<Id>                 done;
    for (const auto& [start, unused] : map_) {
        if (done.contains(start)) {
            continue;
        }
        std::vector<Id> cycle;
        for (Id x = start; !done.contains(x); x = (*this)(x)) {
            done.insert(x);
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    // map_ iterates in ascending order, so each cycle already starts at its
    // minimum and cycles come out ordered by it.
    return out;
}

std::size_t Permutation::longest_cycle() const {
    std::size_t best = map_.empty() ? 1 : 0;
    for (const auto& c : cycles()) {
        best = std::max(best, c.size());
    }
    return best;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    std::map<Id, Id> m;
    for (const auto& [s, qs] : q.mapping()) {
        m[s] = p(qs);
    }
    for (const auto& [s, ps] : p.mapping()) {
        if (!q.mapping().contains(s)) {
            m[s] = ps;
        }
    }
    return Permutation::from_mapping(std::move(m));
}

Permutation inverse(const Permutation& p) {
    std::map<Id, Id> m;
    for (const auto& [from, to] : p.mapping()) {
        m.emplace(to, from);
    }
    return Permutation::from_mapping(std::move(m));
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream out;
    bool               first = true;
    for (const auto& cycle : p.cycles()) {
        out << (first ? "(" : " (");
        first = false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            out << (i ? " " : "") << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

bool check_group_axioms(std::span<const Permutation> elements) {
    std::set<Permutation> set(elements.begin(), elements.end());
    if (set.empty() || !set.contains(Permutation{})) {
        return false;
    }
    std::vector<Permutation> items(set.begin(), set.end());
    for (const auto& x : items) {
        if (!set.contains(inverse(x))) {
            return false;
        }
        for (const auto& y : items) {
            if (!set.contains(compose(x, y))) {
                return false;
            }
        }
    }
    const std::size_t n = items.size();
    // Exhaustive up to 40^3 triples; beyond that a fixed stride sample.
    const std::size_t stride = n <= 40 ? 1 : n / 40 + 1;
    for (std::size_t i = 0; i < n; i += stride) {
        for (std::size_t j = 0; j < n; j += stride) {
            for (std::size_t k = 0; k < n; k += stride) {
                const auto& x = items[i];
                const auto& y = items[j];
                const auto& z = items[k];
                if (compose(compose(x, y), z) != compose(x, compose(y, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Permutation> group_closure(std::span<const Permutation> generators, std::size_t budget) {
    std::set<Permutation>    seen{Permutation{}};
    std::vector<Permutation> frontier{Permutation{}};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                auto h = compose(g, e);
                if (seen.insert(h).second) {
                    if (seen.size() > budget) {
                        throw BudgetExceeded("group order exceeds closure budget " + std::to_string(budget));
                    }
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace sbreak
