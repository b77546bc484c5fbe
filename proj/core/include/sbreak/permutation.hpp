#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sbreak {

using Id = std::uint32_t;

/// A bijection on unsigned ids stored by its non-fixed points only.
///
/// Used both for atom permutations and for graph vertex permutations. Ids not
/// in the mapping are fixed. An explicit `x -> x` entry is never stored.
class Permutation {
public:
    Permutation() = default;

    /// Builds from disjoint cycles, e.g. `{{16, 17}, {23, 24}}`.
    /// Throws PreconditionError if the cycles overlap.
    static Permutation from_cycles(const std::vector<std::vector<Id>>& cycles);
    static Permutation from_cycles(std::initializer_list<std::initializer_list<Id>> cycles);

    /// `image[i]` is the image of id `offset + i`. Throws if `image` is not a
    /// permutation of `offset .. offset + size - 1`.
    static Permutation from_dense(std::span<const Id> image, Id offset = 0);

    /// Throws PreconditionError unless `mapping` is a bijection of its key set.
    static Permutation from_mapping(std::map<Id, Id> mapping);

    Id operator()(Id x) const {
        auto it = map_.find(x);
        return it == map_.end() ? x : it->second;
    }

    bool        is_identity() const noexcept { return map_.empty(); }
    std::size_t support_size() const noexcept { return map_.size(); }
    const std::map<Id, Id>& mapping() const noexcept { return map_; }

    /// Non-trivial cycles, each rotated to start at its smallest element,
    /// ordered by that element.
    std::vector<std::vector<Id>> cycles() const;
    std::size_t longest_cycle() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.map_ < b.map_; }

private:
    std::map<Id, Id> map_;
};

/// Function composition: the result maps `s` to `p(q(s))`.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// Cycle notation over raw ids, e.g. "(16 17) (23 24)". Identity is "".
std::string to_cycle_string(const Permutation& p);

/// True iff `elements` (as a set) is closed under compose, contains the
/// identity and every inverse, and composition is associative on it.
/// Associativity is checked on all triples for small sets and on a
/// deterministic sample otherwise.
bool check_group_axioms(std::span<const Permutation> elements);

/// All elements of the group generated by `generators` (identity included),
/// sorted. Throws BudgetExceeded when the order exceeds `budget`.
std::vector<Permutation> group_closure(std::span<const Permutation> generators, std::size_t budget = 10'000);

} // namespace sbreak
