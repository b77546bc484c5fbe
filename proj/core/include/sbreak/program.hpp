#pragma once

#include <sbreak/permutation.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sbreak {

using AtomId = Id;

/// Head of integrity constraints; never true, pinned by every permutation.
inline constexpr AtomId false_atom = 1;

/// A body literal. `negated` means default negation ("not a").
struct Literal {
    AtomId atom    = 0;
    bool   negated = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(AtomId a) { return {a, false}; }
inline Literal neg(AtomId a) { return {a, true}; }

enum class RuleKind : std::uint8_t { Basic, Cardinality, Choice, Weight, Minimize };

const char* to_string(RuleKind kind);

/// One smodels rule. The body keeps negative literals before positive ones
/// (the layout every rule has on disk); the factories below enforce that.
/// `weights` is aligned with `body` and only used by Weight and Minimize.
struct Rule {
    RuleKind                   kind = RuleKind::Basic;
    std::vector<AtomId>        heads;
    std::uint32_t              bound = 0;
    std::vector<Literal>       body;
    std::vector<std::uint32_t> weights;

    static Rule basic(AtomId head, std::vector<Literal> body);
    static Rule integrity(std::vector<Literal> body) { return basic(false_atom, std::move(body)); }
    static Rule cardinality(AtomId head, std::uint32_t bound, std::vector<Literal> body);
    static Rule choice(std::vector<AtomId> heads, std::vector<Literal> body);
    static Rule weight(AtomId head, std::uint32_t bound, std::vector<Literal> body, std::vector<std::uint32_t> weights);
    static Rule minimize(std::vector<Literal> body, std::vector<std::uint32_t> weights);

    bool is_integrity() const { return kind == RuleKind::Basic && heads.size() == 1 && heads[0] == false_atom; }
    std::size_t negative_count() const;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// A grounded logic program in the smodels dialect.
struct Program {
    std::vector<Rule>             rules;
    std::map<AtomId, std::string> symbols;
    std::vector<AtomId>           compute_true;
    std::vector<AtomId>           compute_false;
    AtomId                        max_atom            = false_atom;
    std::uint32_t                 model_count_request = 1;

    /// Appends `r` and raises `max_atom` to cover its atoms.
    void add_rule(Rule r);
    /// Symbol name if present, otherwise the decimal id.
    std::string name_of(AtomId a) const;
    bool has_weight_rules() const;
    bool has_minimize() const;

    friend bool operator==(const Program&, const Program&) = default;
};

/// Allocates `n` consecutive ids after `max_atom` and advances it.
std::vector<AtomId> fresh_atoms(Program& program, std::size_t n);

/// Renames every atom occurrence (heads, bodies, compute statements).
/// Throws PreconditionError if `p` moves atom 1 or leaves 1..max_atom.
Program apply_permutation(const Program& program, const Permutation& p);

/// Rule multisets equal (bodies compared as multisets) and compute
/// statements equal as sets. Symbol tables are not compared.
bool programs_equal_modulo_rule_order(const Program& a, const Program& b);

/// Throws InvariantError if an atom is 0 or above max_atom, or a rule is
/// malformed for its kind.
void validate(const Program& program);

} // namespace sbreak
