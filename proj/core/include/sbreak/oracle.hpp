#pragma once

#include <sbreak/program.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sbreak {

/// A set of true atoms, kept sorted.
struct Interpretation {
    std::vector<AtomId> true_atoms;

    bool contains(AtomId a) const;

    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
};

struct OracleOptions {
    /// Largest number of non-reserved atoms the enumerator accepts.
    std::size_t   atom_budget = 26;
    /// Search nodes before giving up.
    std::uint64_t node_budget = 200'000'000;
};

/// Positive dependency graph (head atoms on positive body atoms) is acyclic.
bool is_tight(const Program& program);

/// All stable models of a tight program, sorted. Candidate atom sets are
/// explored depth first in ascending atom order and a rule or support
/// condition is checked as soon as all of its atoms are decided.
///
/// Throws NonTightProgram, BudgetExceeded, or UnsupportedFeature (weight rules).
std::vector<Interpretation> enumerate_models(const Program& program, const OracleOptions& options = {});

/// Image of a model under an atom permutation.
Interpretation apply(const Permutation& p, const Interpretation& m);

/// Drops atoms above `max_atom`.
Interpretation project(const Interpretation& m, AtomId max_atom);

/// Orbits of `models` under the group generated by `generators`, as index
/// lists into `models` ordered by their smallest index. Throws InvariantError
/// if a generator maps a model outside the set.
std::vector<std::vector<std::size_t>> model_orbits(std::span<const Interpretation> models,
                                                   std::span<const Permutation>    generators);
std::size_t count_orbits(std::span<const Interpretation> models, std::span<const Permutation> generators);

/// Lex order on characteristic vectors in ascending atom order, false < true.
bool lex_less(const Interpretation& a, const Interpretation& b);

/// Sum of weights of satisfied minimize literals over all minimize statements.
std::int64_t objective(const Program& program, const Interpretation& m);
/// Minimum objective over `models`; empty when there are no models.
std::optional<std::int64_t> min_objective(const Program& program, std::span<const Interpretation> models);

/// One model per line: true atoms by name (raw id if unnamed), space separated.
void write_models(const Program& program, std::span<const Interpretation> models, std::ostream& out);

} // namespace sbreak
