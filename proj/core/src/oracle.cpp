#include <sbreak/errors.hpp>
#include <sbreak/oracle.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace sbreak {

bool Interpretation::contains(AtomId a) const {
    return std::binary_search(true_atoms.begin(), true_atoms.end(), a);
}

bool is_tight(const Program& program) {
    const std::size_t                n = static_cast<std::size_t>(program.max_atom) + 1;
    std::vector<std::vector<AtomId>> deps(n);
    for (const auto& r : program.rules) {
        for (AtomId h : r.heads) {
            for (const auto& l : r.body) {
                if (!l.negated) {
                    deps[h].push_back(l.atom);
                }
            }
        }
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> state(n, 0);
    for (AtomId root = 1; root < n; ++root) {
        if (state[root]) {
            continue;
        }
        std::vector<std::pair<AtomId, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [a, next] = stack.back();
            if (next == deps[a].size()) {
                state[a] = 2;
                stack.pop_back();
                continue;
            }
            AtomId b = deps[a][next++];
            if (state[b] == 1) {
                return false;
            }
            if (state[b] == 0) {
                state[b] = 1;
                stack.emplace_back(b, 0);
            }
        }
    }
    return true;
}

namespace {

class Enumerator {
public:
    Enumerator(const Program& program, const OracleOptions& options) : prog_(program), options_(options) {
        const std::size_t atoms = program.max_atom;
        value_.assign(atoms + 1, 0);
        defs_.resize(atoms + 1);
        checks_.resize(atoms + 1);   // checks_[0]: ready before any decision
        for (std::uint32_t ri = 0; ri < program.rules.size(); ++ri) {
            const Rule& r = program.rules[ri];
            if (r.kind == RuleKind::Minimize) {
                continue;
            }
            for (AtomId h : r.heads) {
                defs_[h].push_back(ri);
            }
            if (r.kind == RuleKind::Basic || r.kind == RuleKind::Cardinality) {
                AtomId last = r.heads[0];
                for (const auto& l : r.body) {
                    last = std::max(last, l.atom);
                }
                checks_[level_of(last)].push_back({CheckKind::Implication, ri});
            }
        }
        for (AtomId a = 2; a <= atoms; ++a) {
            AtomId last = a;
            for (auto ri : defs_[a]) {
                for (const auto& l : program.rules[ri].body) {
                    last = std::max(last, l.atom);
                }
            }
            checks_[level_of(last)].push_back({CheckKind::Support, a});
        }
        for (AtomId a : program.compute_true) {
            checks_[level_of(a)].push_back({CheckKind::MustBeTrue, a});
        }
        for (AtomId a : program.compute_false) {
            checks_[level_of(a)].push_back({CheckKind::MustBeFalse, a});
        }
    }

    std::vector<Interpretation> run() {
        if (passes(0)) {
            search(2);
        }
        std::sort(models_.begin(), models_.end());
        return std::move(models_);
    }

private:
    enum class CheckKind { Implication, Support, MustBeTrue, MustBeFalse };
    struct Check {
        CheckKind     kind;
        std::uint32_t index;
    };

    // Atom 1 is decided up front; atom a >= 2 is decided at level a - 1.
    static std::size_t level_of(AtomId a) { return a <= false_atom ? 0 : a - 1; }

    bool body_holds(const Rule& r) const {
        std::uint32_t sat = 0;
        for (const auto& l : r.body) {
            sat += (value_[l.atom] != 0) != l.negated;
        }
        if (r.kind == RuleKind::Cardinality) {
            return sat >= r.bound;
        }
        return sat == r.body.size();
    }

    bool holds(const Check& c) const {
        switch (c.kind) {
            case CheckKind::Implication: {
                const Rule& r = prog_.rules[c.index];
                return value_[r.heads[0]] || !body_holds(r);
            }
            case CheckKind::Support: {
                if (!value_[c.index]) {
                    return true;
                }
                const auto& d = defs_[c.index];
                return std::any_of(d.begin(), d.end(), [&](std::uint32_t ri) { return body_holds(prog_.rules[ri]); });
            }
            case CheckKind::MustBeTrue : return value_[c.index] != 0;
            case CheckKind::MustBeFalse: return value_[c.index] == 0;
        }
        return false;
    }

    bool passes(std::size_t level) const {
        const auto& cs = checks_[level];
        return std::all_of(cs.begin(), cs.end(), [&](const Check& c) { return holds(c); });
    }

    void search(AtomId a) {
        if (a > prog_.max_atom) {
            Interpretation m;
            for (AtomId b = 2; b <= prog_.max_atom; ++b) {
                if (value_[b]) {
                    m.true_atoms.push_back(b);
                }
            }
            models_.push_back(std::move(m));
            return;
        }
        for (char v : {0, 1}) {
            if (++nodes_ > options_.node_budget) {
                throw BudgetExceeded("oracle node budget " + std::to_string(options_.node_budget) + " exceeded");
            }
            value_[a] = v;
            if (passes(level_of(a))) {
                search(a + 1);
            }
        }
        value_[a] = 0;
    }

    const Program&                          prog_;
    OracleOptions                           options_;
    std::vector<char>                       value_;
    std::vector<std::vector<std::uint32_t>> defs_;
    std::vector<std::vector<Check>>         checks_;
    std::vector<Interpretation>             models_;
    std::uint64_t                           nodes_ = 0;
};

} // namespace

std::vector<Interpretation> enumerate_models(const Program& program, const OracleOptions& options) {
    if (program.has_weight_rules()) {
        throw UnsupportedFeature("the oracle does not support weight rules");
    }
    validate(program);
    if (!is_tight(program)) {
        throw NonTightProgram("program is not tight");
    }
    const std::size_t atoms = program.max_atom - 1;
    if (atoms > options.atom_budget) {
        throw BudgetExceeded("program has " + std::to_string(atoms) + " atoms, oracle budget is " +
                             std::to_string(options.atom_budget));
    }
    return Enumerator(program, options).run();
}

Interpretation apply(const Permutation& p, const Interpretation& m) {
    Interpretation out;
    out.true_atoms.reserve(m.true_atoms.size());
    for (AtomId a : m.true_atoms) {
        out.true_atoms.push_back(p(a));
    }
    std::sort(out.true_atoms.begin(), out.true_atoms.end());
    return out;
}

Interpretation project(const Interpretation& m, AtomId max_atom) {
    Interpretation out;
    std::copy_if(m.true_atoms.begin(), m.true_atoms.end(), std::back_inserter(out.true_atoms),
                 [max_atom](AtomId a) { return a <= max_atom; });
    return out;
}

std::vector<std::vector<std::size_t>> model_orbits(std::span<const Interpretation> models,
                                                   std::span<const Permutation>    generators) {
    std::map<std::vector<AtomId>, std::size_t> index;
    for (std::size_t i = 0; i < models.size(); ++i) {
        index.emplace(models[i].true_atoms, i);
    }
    std::vector<std::size_t> parent(models.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x         = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < models.size(); ++i) {
        for (const auto& g : generators) {
            auto it = index.find(apply(g, models[i]).true_atoms);
            if (it == index.end()) {
                throw InvariantError("generator maps a model outside the model set");
            }
            auto a = find(i);
            auto b = find(it->second);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < models.size(); ++i) {
        groups[find(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    return out;
}

std::size_t count_orbits(std::span<const Interpretation> models, std::span<const Permutation> generators) {
    return model_orbits(models, generators).size();
}

bool lex_less(const Interpretation& a, const Interpretation& b) {
    auto i = a.true_atoms.begin();
    auto j = b.true_atoms.begin();
    while (i != a.true_atoms.end() && j != b.true_atoms.end()) {
        if (*i == *j) {
            ++i;
            ++j;
        }
        else {
            // The smaller differing atom is true only on its own side.
            return *j < *i;
        }
    }
    return i == a.true_atoms.end() && j != b.true_atoms.end();
}

std::int64_t objective(const Program& program, const Interpretation& m) {
    std::int64_t total = 0;
    for (const auto& r : program.rules) {
        if (r.kind != RuleKind::Minimize) {
            continue;
        }
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (m.contains(r.body[i].atom) != r.body[i].negated) {
                total += r.weights[i];
            }
        }
    }
    return total;
}

std::optional<std::int64_t> min_objective(const Program& program, std::span<const Interpretation> models) {
    std::optional<std::int64_t> best;
    for (const auto& m : models) {
        auto v = objective(program, m);
        if (!best || v < *best) {
            best = v;
        }
    }
    return best;
}

void write_models(const Program& program, std::span<const Interpretation> models, std::ostream& out) {
    for (const auto& m : models) {
        std::vector<std::string> names;
        for (AtomId a : m.true_atoms) {
            names.push_back(program.name_of(a));
        }
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < names.size(); ++i) {
            out << (i ? " " : "") << names[i];
        }
        out << '\n';
    }
}

} // namespace sbreak
