// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <cli/commands.hpp>

#include <sbreak/automorphism.hpp>
#include <sbreak/colored_graph.hpp>
#include <sbreak/instances.hpp>
#include <sbreak/oracle.hpp>
#include <sbreak/sbc.hpp>
#include <sbreak/smodels_io.hpp>

#include <brute.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

using namespace sbreak;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool        passed = false;
    std::string detail;
};

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
    if (!condition) {
        throw Failure(what);
    }
}

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream       in(text);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, const std::string& input, std::string& out) {
    std::istringstream in(input);
    std::ostringstream o, e;
    int                code = cli::run(args, in, o, e);
    out                     = o.str();
    return code;
}

// Every program and graph the suite touches, for the validity criterion.
std::vector<Program> corpus;

Outcome worked_example() {
    auto       start = Clock::now();
    const auto text  = write_smodels(gen_house(worked_house_example()));
    const auto p     = parse_smodels(text).program;
    corpus.push_back(p);

    std::string out;
    require(run_cli({"detect", "-", "--limit=1"}, text, out) == cli::exit_ok, "detect exit code");
    std::istringstream report(out);
    std::string        head, raw;
    std::getline(report, head);
    std::getline(report, raw);
    require(head == "1 generators", "expected exactly one generator, got '" + head + "'");

    auto gens = find_generators(build_graph(p), {.limit = 1});
    require(gens.size() == 1 && to_cycle_string(gens.generators[0]) == raw, "report differs from library");
    const auto& g      = gens.generators[0];
    auto        cycles = g.cycles();
    require(cycles.size() == 5, "expected 5 transpositions, got " + std::to_string(cycles.size()));

    static const std::regex assign(R"(cabinetTOthing\((\d+),(\d+)\))");
    std::set<std::string>   cabinet_pairs, things;
    int                     auxiliary = 0;
    for (const auto& c : cycles) {
        require(c.size() == 2, "cycle longer than 2");
        if (!p.symbols.count(c[0]) && !p.symbols.count(c[1])) {
            ++auxiliary;
            continue;
        }
        std::smatch a, b;
        require(p.symbols.count(c[0]) && p.symbols.count(c[1]), "named atom paired with unnamed atom");
        const auto na = p.symbols.at(c[0]);
        const auto nb = p.symbols.at(c[1]);
        require(std::regex_match(na, a, assign) && std::regex_match(nb, b, assign), "pair is not two assignment atoms");
        require(a[2] == b[2], "pair mixes two things");
        things.insert(a[2]);
        cabinet_pairs.insert(std::min(a[1].str(), b[1].str()) + "/" + std::max(a[1].str(), b[1].str()));
    }
    require(auxiliary == 1 && things.size() == 4 && cabinet_pairs.size() == 1,
            "generator is not a swap of two cabinets over every thing plus one auxiliary pair");

    // The golden chain with its atoms renamed onto ours must be our chain.
    const std::vector<std::string> golden_chain = {
        "1 1 2 1 17 16",  "1 1 1 0 48",     "1 48 3 1 24 23 16", "1 48 3 2 17 24 23", "1 48 2 0 16 49", "1 48 2 1 17 49",
        "1 49 3 1 31 30 23", "1 49 3 2 24 31 30", "1 49 2 0 23 50", "1 49 2 1 24 50", "1 50 3 1 38 37 30",
        "1 50 3 2 31 38 37", "1 50 2 0 30 51", "1 50 2 1 31 51", "1 51 3 1 45 44 37", "1 51 3 2 38 45 44"};
    auto chain = emit_chain(p, g);
    require(chain.rules.size() == 16 && chain.chain_atoms.size() == 4, "chain size");
    std::map<std::string, std::string> rename{{"1", "1"}};
    const std::vector<std::pair<int, int>> golden_pairs{{16, 17}, {23, 24}, {30, 31}, {37, 38}, {44, 45}};
    for (std::size_t i = 0; i < 5; ++i) {
        rename[std::to_string(golden_pairs[i].first)]  = std::to_string(chain.pairs[i].first);
        rename[std::to_string(golden_pairs[i].second)] = std::to_string(chain.pairs[i].second);
    }
    for (std::size_t i = 0; i < 4; ++i) {
        rename[std::to_string(48 + i)] = std::to_string(chain.chain_atoms[i]);
    }
    for (std::size_t i = 0; i < golden_chain.size(); ++i) {
        auto t = tokens(golden_chain[i]);
        // tokens 0, 2, 3 are type, literal count and negative count
        std::string renamed = t[0];
        for (std::size_t j = 1; j < t.size(); ++j) {
            renamed += " " + (j == 2 || j == 3 ? t[j] : rename.at(t[j]));
        }
        require(format_rule(chain.rules[i]) == renamed, "rule " + std::to_string(i + 1) + " is '" +
                                                            format_rule(chain.rules[i]) + "', expected '" + renamed + "'");
    }

    require(run_cli({"break", "-", "--limit=1"}, text, out) == cli::exit_ok, "break exit code");
    auto broken = parse_smodels(out).program;
    require(broken.rules.size() == p.rules.size() + 16 && broken.max_atom == p.max_atom + 4, "break output size");
    require(std::equal(chain.rules.begin(), chain.rules.end(), broken.rules.end() - 16), "break output differs from chain");

    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    require(ms < 1000, "took " + std::to_string(ms) + " ms");
    std::ostringstream d;
    d << "generator " << raw << "; chain 16 rules, atoms " << chain.chain_atoms.front() << ".."
      << chain.chain_atoms.back() << "; " << static_cast<int>(ms) << " ms";
    return {true, d.str()};
}

cli::VerifyReport verify(const Program& p) {
    corpus.push_back(p);
    return cli::verify_program(p, {}, {.atom_budget = 128});
}

bool check(const cli::VerifyReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) {
            return c.passed.value_or(false);
        }
    }
    return false;
}

Outcome soundness() {
    auto               start = Clock::now();
    std::ostringstream d;
    std::vector<std::pair<std::string, Program>> instances;
    for (unsigned n = 2; n <= 4; ++n) {
        instances.push_back({"php" + std::to_string(n) + "x" + std::to_string(n), gen_php({n, n})});
    }
    for (unsigned persons = 1; persons <= 3; ++persons) {
        for (unsigned things = 1; things <= 3; ++things) {
            HouseSpec spec{.persons = persons, .things_per_person = things};
            spec.cabinets = persons * ((things + 1) / 2);
            instances.push_back({spec.name(), gen_house(spec)});
            // one spare cabinet
            ++spec.cabinets;
            instances.push_back({spec.name() + "+1", gen_house(spec)});
        }
    }
    instances.push_back({"worked", gen_house(worked_house_example())});
    for (const auto& [name, p] : instances) {
        auto r = verify(p);
        for (const char* c : {"generator_validity", "model_symmetry", "soundness", "orbit_representatives", "lex_leaders"}) {
            require(check(r, c), name + ": " + c);
        }
        require(r.models_after <= r.models_before && r.models_after >= r.orbits, name + ": count bounds");
        if (name == "php3x3") {
            require(r.models_after >= 1 && r.models_after < 6, "php3x3 keeps " + std::to_string(r.models_after));
        }
        d << name << " " << r.models_before << "->" << r.models_after << " ";
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    require(s < 60, "took " + std::to_string(s) + " s");
    d << "(" << std::fixed << std::setprecision(2) << s << " s)";
    return {true, d.str()};
}

Outcome unsatisfiable() {
    auto               start = Clock::now();
    std::ostringstream d;
    for (unsigned n = 3; n <= 5; ++n) {
        auto p = gen_php({n, n - 1});
        auto r = verify(p);
        require(r.models_before == 0 && r.models_after == 0, "php" + std::to_string(n) + " not unsatisfiable");
        require(check(r, "generator_validity"), "invalid generator");
        d << "php" << n << "x" << n - 1 << " 0->0 ";
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    require(s < 60, "took " + std::to_string(s) + " s");
    d << "(" << std::fixed << std::setprecision(2) << s << " s)";
    return {true, d.str()};
}

Outcome refinement() {
    auto            start = Clock::now();
    std::mt19937_64 rng(20120405);
    std::size_t     graphs = 0, cases = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& edges : brute::graphs_up_to_iso(n)) {
            ++graphs;
            for (int trial = 0; trial < 4; ++trial) {
                // trial 0 is the uniform coloring; the rest are random
                Coloring start_coloring = trial == 0 ? brute::random_coloring(n, 1, rng)
                                                     : brute::random_coloring(n, 1 + trial, rng);
                auto g = make_graph(n, edges, start_coloring);
                auto r = refine(g, start_coloring);
                require(brute::as_set_partition(r) == brute::coarsest_equitable(g, start_coloring),
                        "mismatch on a " + std::to_string(n) + "-vertex graph");
                ++cases;
            }
        }
    }
    require(graphs == 208, "corpus has " + std::to_string(graphs) + " graphs");
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    require(s < 120, "took " + std::to_string(s) + " s");
    std::ostringstream d;
    d << graphs << " graphs, " << cases << " colorings, exact match (" << std::fixed << std::setprecision(2) << s << " s)";
    return {true, d.str()};
}

Program without_minimize(Program p) {
    std::erase_if(p.rules, [](const Rule& r) { return r.kind == RuleKind::Minimize; });
    return p;
}

Outcome validity() {
    std::size_t     checked = 0, minimize_moved = 0;
    std::mt19937_64 rng(7);
    // Generated instances must be preserved as whole programs, minimize
    // statements included. Random programs carry arbitrary minimize weights,
    // which detection ignores, so they are judged on the remaining rules.
    std::vector<std::pair<Program, bool>> programs;
    for (const auto& p : corpus) {
        programs.push_back({p, true});
    }
    programs.push_back({gen_php({5, 5}), true});
    programs.push_back({gen_house({.persons = 4, .things_per_person = 3, .cabinets = 8, .cabinet_cost = 3}), true});
    for (int i = 0; i < 100; ++i) {
        programs.push_back({brute::random_program(rng, 10, 8), false});
    }
    for (const auto& [p, whole] : programs) {
        auto g    = build_graph(p);
        auto gens = find_generators(g);
        auto core = without_minimize(p);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& a = gens.generators[i];
            require(is_automorphism(g, gens.graph_generators[i]), "graph automorphism check failed");
            require(atom_restriction(gens.graph_generators[i], g) == a, "atom restriction differs");
            require(programs_equal_modulo_rule_order(apply_permutation(core, a), core), "rule multiset not preserved");
            bool full = programs_equal_modulo_rule_order(apply_permutation(p, a), p);
            require(full || !whole, "generated instance not preserved with its minimize statement");
            minimize_moved += !full;
            ++checked;
        }
    }
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& edges : brute::graphs_up_to_iso(n)) {
            auto g = make_graph(n, edges, brute::random_coloring(n, 2, rng));
            for (const auto& v : find_generators(g).generators) {
                require(is_automorphism(g, v), "graph automorphism check failed");
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " generators over " + std::to_string(programs.size()) +
                      " programs and 208 graphs, all valid (" + std::to_string(minimize_moved) +
                      " random-program generators move minimize weights, which detection ignores)"};
}

Outcome optimum() {
    std::mt19937_64    rng(99);
    std::ostringstream d;
    int                specs = 0;
    while (specs < 12) {
        HouseSpec spec;
        spec.persons           = std::uniform_int_distribution<unsigned>(1, 3)(rng);
        spec.things_per_person = std::uniform_int_distribution<unsigned>(1, 2)(rng);
        spec.cabinet_capacity  = std::uniform_int_distribution<unsigned>(1, 2)(rng);
        unsigned cap           = spec.cabinet_capacity;
        unsigned need          = spec.persons * ((spec.things_per_person + cap - 1) / cap);
        spec.cabinets          = need + std::uniform_int_distribution<unsigned>(0, 1)(rng);
        spec.cabinet_cost      = std::uniform_int_distribution<unsigned>(1, 20)(rng);
        auto p                 = gen_house(spec);
        if (p.max_atom > 70) {
            continue;
        }
        corpus.push_back(p);
        auto gens   = find_generators(build_graph(p));
        auto broken = break_symmetries(p, cli::chainable(gens));
        auto before = min_objective(p, enumerate_models(p, {.atom_budget = 128}));
        auto after  = min_objective(broken, enumerate_models(broken, {.atom_budget = 256}));
        require(before.has_value() && before == after, spec.name() + ": optimum changed");
        d << spec.name() << "/c" << spec.cabinets << "/cap" << cap << " " << *before << " ";
        ++specs;
    }
    return {true, std::to_string(specs) + " specs: " + d.str()};
}

Outcome fidelity() {
    std::size_t files = 0;
    for (const char* name : {"lex_chain.sm", "all_kinds.sm", "empty.sm", "trailing.sm"}) {
        std::ifstream      in(std::string(SBREAK_TEST_DATA) + "/" + name, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        require(!s.str().empty(), std::string("missing ") + name);
        require(tokens(write_smodels(parse_smodels(s.str()))) == tokens(s.str()), std::string("round trip of ") + name);
        ++files;
    }
    for (const char* line : {"1 1 2 1 17 16", "2 44 4 0 3 37 30 23 16"}) {
        std::string text = std::string(line) + "\n0\n0\nB+\n0\nB-\n0\n1\n";
        auto        doc  = parse_smodels(text);
        require(format_rule(doc.program.rules.at(0)) == line, std::string("rule line ") + line);
        require(write_smodels(doc) == text, std::string("document around ") + line);
    }
    for (const auto& p : corpus) {
        auto text = write_smodels(p);
        require(write_smodels(parse_smodels(text)) == text, "generated instance round trip");
        ++files;
    }
    return {true, std::to_string(files) + " documents token-identical, including both quoted rule lines"};
}

Outcome bench_only() {
    std::string out;
    int code = run_cli({"bench", "--persons", "1-2", "--limits", "20,none,5,default,10", "--timeout", "5"}, "", out);
    require(code == cli::exit_ok, "bench failed");
    require(out.rfind("instance\tnone\tdefault\tlimit=5\tlimit=10\tlimit=20\n", 0) == 0, "bench header");
    return {true, "bench reports local timings only; reference wall-clock values and optima are not asserted"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked example", worked_example},
        {"2 soundness and representatives", soundness},
        {"3 unsatisfiability preserved", unsatisfiable},
        {"4 refinement vs brute force", refinement},
        {"5 generator validity", validity},
        {"6 optimum preserved", optimum},
        {"7 format fidelity", fidelity},
        {"8 timings excluded", bench_only},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        }
        catch (const std::exception& e) {
            o = {false, e.what()};
        }
        failures += !o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
    }
    return failures ? 1 : 0;
}
