#include <sbreak/errors.hpp>
#include <sbreak/sbc.hpp>

#include <algorithm>

namespace sbreak {
namespace {

// Atoms of `g` must lie in 1..atom_limit; chain atoms start after last_used.
SbcChain chain_for(const Permutation& g, AtomId atom_limit, AtomId last_used, std::size_t index) {
    if (g.is_identity()) {
        throw UnsupportedGenerator(index, "identity generator");
    }
    SbcChain chain;
    for (const auto& cycle : g.cycles()) {
        if (cycle.size() > 2) {
            throw UnsupportedGenerator(index, "cycle of length " + std::to_string(cycle.size()) +
                                                  " (only transpositions are supported)");
        }
        if (cycle[0] == false_atom) {
            throw UnsupportedGenerator(index, "generator moves the reserved atom 1");
        }
        if (cycle[1] > atom_limit) {
            throw UnsupportedGenerator(index, "generator moves atoms beyond max_atom");
        }
        chain.pairs.emplace_back(cycle[0], cycle[1]);
    }
    // cycles() already yields pairs sorted by their smaller atom.
    const std::size_t k = chain.pairs.size();
    for (std::size_t i = 1; i < k; ++i) {
        chain.chain_atoms.push_back(last_used + static_cast<AtomId>(i));
    }

    auto x  = [&](std::size_t i) { return chain.pairs[i - 1].first; };
    auto y  = [&](std::size_t i) { return chain.pairs[i - 1].second; };
    auto cp = [&](std::size_t i) { return chain.chain_atoms[i - 2]; };

    auto& rules = chain.rules;
    rules.push_back(Rule::integrity({neg(y(1)), pos(x(1))}));
    if (k >= 2) {
        rules.push_back(Rule::integrity({pos(cp(2))}));
    }
    for (std::size_t i = 2; i <= k; ++i) {
        // x(i) > y(i) while position i-1 is not strictly increasing.
        rules.push_back(Rule::basic(cp(i), {neg(y(i)), pos(x(i)), pos(x(i - 1))}));
        rules.push_back(Rule::basic(cp(i), {neg(y(i - 1)), neg(y(i)), pos(x(i))}));
        if (i < k) {
            rules.push_back(Rule::basic(cp(i), {pos(x(i - 1)), pos(cp(i + 1))}));
            rules.push_back(Rule::basic(cp(i), {neg(y(i - 1)), pos(cp(i + 1))}));
        }
    }
    return chain;
}

} // namespace

SbcChain emit_chain(const Program& program, const Permutation& g) {
    return chain_for(g, program.max_atom, program.max_atom, 0);
}

Program break_symmetries(const Program& program, std::span<const Permutation> generators) {
    Program out = program;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        SbcChain chain = chain_for(generators[i], program.max_atom, out.max_atom, i);
        for (auto& r : chain.rules) {
            out.rules.push_back(std::move(r));
        }
        out.max_atom += static_cast<AtomId>(chain.chain_atoms.size());
    }
    return out;
}

Program break_symmetries(const Program& program, const GeneratorSet& generators) {
    return break_symmetries(program, std::span<const Permutation>(generators.generators));
}

} // namespace sbreak
