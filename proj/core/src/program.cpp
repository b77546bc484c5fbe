#include <sbreak/errors.hpp>
#include <sbreak/program.hpp>

#include <algorithm>
#include <tuple>

namespace sbreak {

const char* to_string(RuleKind kind) {
    switch (kind) {
        case RuleKind::Basic      : return "basic";
        case RuleKind::Cardinality: return "cardinality";
        case RuleKind::Choice     : return "choice";
        case RuleKind::Weight     : return "weight";
        case RuleKind::Minimize   : return "minimize";
    }
    return "unknown";
}

namespace {

// Negative literals first, each group in its given order.
void order_body(std::vector<Literal>& body) {
    std::stable_partition(body.begin(), body.end(), [](const Literal& l) { return l.negated; });
}

void order_weighted(std::vector<Literal>& body, std::vector<std::uint32_t>& weights) {
    if (weights.size() != body.size()) {
        throw PreconditionError("weights must align with body literals");
    }
    std::vector<std::pair<Literal, std::uint32_t>> items;
    for (std::size_t i = 0; i < body.size(); ++i) {
        items.emplace_back(body[i], weights[i]);
    }
    std::stable_partition(items.begin(), items.end(), [](const auto& it) { return it.first.negated; });
    for (std::size_t i = 0; i < items.size(); ++i) {
        body[i]    = items[i].first;
        weights[i] = items[i].second;
    }
}

} // namespace

Rule Rule::basic(AtomId head, std::vector<Literal> body) {
    order_body(body);
    return Rule{RuleKind::Basic, {head}, 0, std::move(body), {}};
}

Rule Rule::cardinality(AtomId head, std::uint32_t bound, std::vector<Literal> body) {
    order_body(body);
    return Rule{RuleKind::Cardinality, {head}, bound, std::move(body), {}};
}

Rule Rule::choice(std::vector<AtomId> heads, std::vector<Literal> body) {
    order_body(body);
    return Rule{RuleKind::Choice, std::move(heads), 0, std::move(body), {}};
}

Rule Rule::weight(AtomId head, std::uint32_t bound, std::vector<Literal> body, std::vector<std::uint32_t> weights) {
    order_weighted(body, weights);
    return Rule{RuleKind::Weight, {head}, bound, std::move(body), std::move(weights)};
}

Rule Rule::minimize(std::vector<Literal> body, std::vector<std::uint32_t> weights) {
    order_weighted(body, weights);
    return Rule{RuleKind::Minimize, {}, 0, std::move(body), std::move(weights)};
}

std::size_t Rule::negative_count() const {
    return static_cast<std::size_t>(std::count_if(body.begin(), body.end(), [](const Literal& l) { return l.negated; }));
}

void Program::add_rule(Rule r) {
    for (AtomId h : r.heads) {
        max_atom = std::max(max_atom, h);
    }
    for (const auto& l : r.body) {
        max_atom = std::max(max_atom, l.atom);
    }
    rules.push_back(std::move(r));
}

std::string Program::name_of(AtomId a) const {
    auto it = symbols.find(a);
    return it == symbols.end() ? std::to_string(a) : it->second;
}

bool Program::has_weight_rules() const {
    return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.kind == RuleKind::Weight; });
}

bool Program::has_minimize() const {
    return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.kind == RuleKind::Minimize; });
}

std::vector<AtomId> fresh_atoms(Program& program, std::size_t n) {
    std::vector<AtomId> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(++program.max_atom);
    }
    return out;
}

Program apply_permutation(const Program& program, const Permutation& p) {
    for (const auto& [from, to] : p.mapping()) {
        if (from == false_atom) {
            throw PreconditionError("permutation moves the reserved atom 1");
        }
        if (from < 1 || from > program.max_atom || to < 1 || to > program.max_atom) {
            throw PreconditionError("permutation maps outside 1.." + std::to_string(program.max_atom));
        }
    }
    Program out = program;
    for (auto& r : out.rules) {
        for (auto& h : r.heads) {
            h = p(h);
        }
        for (auto& l : r.body) {
            l.atom = p(l.atom);
        }
    }
    for (auto& a : out.compute_true) {
        a = p(a);
    }
    for (auto& a : out.compute_false) {
        a = p(a);
    }
    return out;
}

namespace {

struct NormalRule {
    RuleKind                                       kind;
    std::vector<AtomId>                            heads;
    std::uint32_t                                  bound;
    std::vector<std::pair<Literal, std::uint32_t>> body;

    friend auto operator<=>(const NormalRule&, const NormalRule&) = default;
};

NormalRule normalize(const Rule& r) {
    NormalRule n{r.kind, r.heads, r.bound, {}};
    std::sort(n.heads.begin(), n.heads.end());
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        n.body.emplace_back(r.body[i], i < r.weights.size() ? r.weights[i] : 0u);
    }
    std::sort(n.body.begin(), n.body.end());
    return n;
}

std::vector<NormalRule> normalize(const Program& p) {
    std::vector<NormalRule> out;
    out.reserve(p.rules.size());
    for (const auto& r : p.rules) {
        out.push_back(normalize(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AtomId> as_set(std::vector<AtomId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

bool programs_equal_modulo_rule_order(const Program& a, const Program& b) {
    return as_set(a.compute_true) == as_set(b.compute_true) && as_set(a.compute_false) == as_set(b.compute_false) &&
           a.rules.size() == b.rules.size() && normalize(a) == normalize(b);
}

void validate(const Program& program) {
    auto check_atom = [&](AtomId a) {
        if (a < 1 || a > program.max_atom) {
            throw InvariantError("atom " + std::to_string(a) + " outside 1.." + std::to_string(program.max_atom));
        }
    };
    for (const auto& r : program.rules) {
        switch (r.kind) {
            case RuleKind::Basic:
            case RuleKind::Cardinality:
            case RuleKind::Weight:
                if (r.heads.size() != 1) {
                    throw InvariantError(std::string(to_string(r.kind)) + " rule needs exactly one head");
                }
                break;
            case RuleKind::Choice:
                if (r.heads.empty()) {
                    throw InvariantError("choice rule needs at least one head");
                }
                break;
            case RuleKind::Minimize:
                if (!r.heads.empty()) {
                    throw InvariantError("minimize statement has no head");
                }
                break;
        }
        if ((r.kind == RuleKind::Weight || r.kind == RuleKind::Minimize) && r.weights.size() != r.body.size()) {
            throw InvariantError("weights must align with body literals");
        }
        for (AtomId h : r.heads) {
            check_atom(h);
        }
        for (const auto& l : r.body) {
            check_atom(l.atom);
        }
    }
    for (AtomId a : program.compute_true) {
        check_atom(a);
    }
    for (AtomId a : program.compute_false) {
        check_atom(a);
    }
}

} // namespace sbreak
