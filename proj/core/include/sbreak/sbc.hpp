#pragma once

#include <sbreak/automorphism.hpp>
#include <sbreak/program.hpp>

#include <span>
#include <utility>
#include <vector>

namespace sbreak {

/// Lex-leader chain for one generator.
///
/// `pairs` holds one (x, y = g(x)) per transposition with x < y, sorted by x.
/// `chain_atoms[i]` is the auxiliary atom for pair index i + 2 (1-based), so
/// there is one fewer chain atom than pairs.
struct SbcChain {
    std::vector<std::pair<AtomId, AtomId>> pairs;
    std::vector<AtomId>                    chain_atoms;
    std::vector<Rule>                      rules;
};

/// Builds the chain for `g`, allocating chain atoms after `program.max_atom`
/// (the program itself is not modified). With pairs (x1,y1)..(xk,yk) and
/// chain atoms c2..ck the rules are, in order:
///
///     :- x1, not y1.
///     :- c2.
///     for i = 2..k:
///         ci :- xi, not yi, x(i-1).
///         ci :- xi, not yi, not y(i-1).
///         if i < k:
///             ci :- x(i-1), c(i+1).
///             ci :- not y(i-1), c(i+1).
///
/// Throws UnsupportedGenerator (index 0) for the identity, for generators
/// moving atom 1 or atoms beyond max_atom, and for cycles longer than 2.
SbcChain emit_chain(const Program& program, const Permutation& g);

/// Appends one chain per generator, in order, after the original rules.
/// Errors carry the index of the offending generator.
Program break_symmetries(const Program& program, std::span<const Permutation> generators);
Program break_symmetries(const Program& program, const GeneratorSet& generators);

} // namespace sbreak
