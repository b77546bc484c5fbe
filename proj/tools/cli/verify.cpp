#include <cli/commands.hpp>

#include <sbreak/colored_graph.hpp>
#include <sbreak/sbc.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace sbreak::cli {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed.value_or(true); });
}

void VerifyReport::print(std::ostream& out) const {
    out << "generators " << generators << " (used " << used << ")\n";
    out << "models_before " << models_before << '\n';
    out << "models_after " << models_after << '\n';
    out << "orbits " << orbits << '\n';
    for (const auto& c : checks) {
        out << "check " << c.name << ' ' << (c.passed ? (*c.passed ? "PASS" : "FAIL") : "SKIP");
        if (!c.detail.empty()) {
            out << ' ' << c.detail;
        }
        out << '\n';
    }
    out << "verdict " << (passed() ? "PASS" : "FAIL") << '\n';
}

std::vector<Permutation> chainable(const GeneratorSet& gens) {
    std::vector<Permutation> out;
    for (const auto& g : gens.generators) {
        if (g.longest_cycle() <= 2) {
            out.push_back(g);
        }
    }
    return out;
}

VerifyReport verify_program(const Program& program, const SearchOptions& search, const OracleOptions& oracle) {
    VerifyReport report;
    const auto   graph = build_graph(program);
    const auto   gens  = find_generators(graph, search);
    const auto   used  = chainable(gens);
    report.generators  = gens.size();
    report.used        = used.size();

    bool valid = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        valid = valid && is_automorphism(graph, gens.graph_generators[i]) &&
                programs_equal_modulo_rule_order(apply_permutation(program, gens.generators[i]), program);
    }
    report.checks.push_back({"generator_validity", valid, {}});

    const auto models = enumerate_models(program, oracle);
    report.models_before = models.size();
    std::set<Interpretation> model_set(models.begin(), models.end());

    bool symmetric = true;
    for (const auto& g : gens.generators) {
        for (const auto& m : models) {
            symmetric = symmetric && model_set.contains(apply(g, m));
        }
    }
    report.checks.push_back({"model_symmetry", symmetric, {}});

    const Program broken = break_symmetries(program, used);
    auto          oracle_after = oracle;
    oracle_after.atom_budget += broken.max_atom - program.max_atom;
    const auto after = enumerate_models(broken, oracle_after);
    report.models_after = after.size();

    std::set<Interpretation> survivors;
    bool                     sound = true;
    for (const auto& m : after) {
        auto p = project(m, program.max_atom);
        sound  = sound && model_set.contains(p) && survivors.insert(p).second;
    }
    report.checks.push_back({"soundness", sound, {}});

    const auto orbits = symmetric ? model_orbits(models, used) : std::vector<std::vector<std::size_t>>{};
    report.orbits     = orbits.size();
    bool kept         = symmetric;
    bool leaders      = symmetric;
    for (const auto& orbit : orbits) {
        kept = kept && std::any_of(orbit.begin(), orbit.end(), [&](std::size_t i) { return survivors.contains(models[i]); });
        std::size_t best = orbit.front();
        for (std::size_t i : orbit) {
            if (lex_less(models[i], models[best])) {
                best = i;
            }
        }
        leaders = leaders && survivors.contains(models[best]);
    }
    report.checks.push_back({"orbit_representatives", kept, {}});
    report.checks.push_back({"lex_leaders", leaders, {}});

    if (program.has_minimize()) {
        auto before_opt = min_objective(program, models);
        auto after_opt  = min_objective(broken, after);
        std::string detail = "min " + (before_opt ? std::to_string(*before_opt) : std::string("none")) + " -> " +
                             (after_opt ? std::to_string(*after_opt) : std::string("none"));
        report.checks.push_back({"optimum", before_opt == after_opt, detail});
    }
    else {
        report.checks.push_back({"optimum", std::nullopt, "no minimize statement"});
    }
    return report;
}

} // namespace sbreak::cli
