#include <cli/commands.hpp>

#include <sbreak/colored_graph.hpp>
#include <sbreak/errors.hpp>
#include <sbreak/instances.hpp>
#include <sbreak/sbc.hpp>
#include <sbreak/smodels_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace sbreak::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Input {
    std::string     text;
    SmodelsDocument doc;
};

Input load(const std::string& path, std::istream& in) {
    Input input;
    if (path == "-") {
        input.text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw Error("cannot open " + path);
        }
        input.text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    input.doc = parse_smodels(input.text);
    return input;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write " + path);
    }
    file << text;
}

struct SearchFlags {
    std::optional<std::size_t>   limit;
    std::uint64_t                seed = 0;
    std::optional<double>        timeout;
    std::optional<std::uint64_t> node_budget;

    void add_to(CLI::App& app) {
        app.add_option("--limit", limit, "Maximum number of generators to compute");
        app.add_option("--seed", seed, "Tie-break key for the search");
        app.add_option("--timeout", timeout, "Wall-clock limit for detection in seconds");
        app.add_option("--node-budget", node_budget, "Maximum search nodes for detection");
    }

    SearchOptions options() const {
        SearchOptions o;
        o.limit       = limit;
        o.seed        = seed;
        o.node_budget = node_budget;
        if (timeout) {
            o.time_budget = std::chrono::milliseconds(static_cast<long long>(*timeout * 1000.0));
        }
        return o;
    }
};

std::vector<unsigned> parse_range(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream     ss(text);
    std::string           item;
    while (std::getline(ss, item, ',')) {
        if (auto dash = item.find('-'); dash != std::string::npos) {
            unsigned lo = static_cast<unsigned>(std::stoul(item.substr(0, dash)));
            unsigned hi = static_cast<unsigned>(std::stoul(item.substr(dash + 1)));
            for (unsigned v = lo; v <= hi; ++v) {
                out.push_back(v);
            }
        }
        else if (!item.empty()) {
            out.push_back(static_cast<unsigned>(std::stoul(item)));
        }
    }
    return out;
}

// Column order: none, default, then numeric limits ascending.
struct LimitColumn {
    enum Kind { None, Default, Capped } kind = None;
    std::size_t value                        = 0;

    std::string label() const {
        switch (kind) {
            case None   : return "none";
            case Default: return "default";
            case Capped : return "limit=" + std::to_string(value);
        }
        return {};
    }
    friend bool operator<(const LimitColumn& a, const LimitColumn& b) {
        return a.kind != b.kind ? a.kind < b.kind : a.value < b.value;
    }
    friend bool operator==(const LimitColumn&, const LimitColumn&) = default;
};

std::vector<LimitColumn> parse_limits(const std::string& text) {
    std::vector<LimitColumn> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
        if (item == "none") {
            out.push_back({LimitColumn::None, 0});
        }
        else if (item == "default" || item == "all") {
            out.push_back({LimitColumn::Default, 0});
        }
        else if (!item.empty()) {
            out.push_back({LimitColumn::Capped, std::stoul(item)});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string models_cell(const Program& p, const OracleOptions& oracle) {
    try {
        return std::to_string(enumerate_models(p, oracle).size());
    }
    catch (const BudgetExceeded&) {
        return "-";
    }
    catch (const NonTightProgram&) {
        return "-";
    }
}

} // namespace

std::string RunReport::to_string() const {
    std::ostringstream out;
    out << "instance=" << (instance.empty() ? "-" : instance) << " atoms=" << atoms_before << "->" << atoms_after
        << " rules=" << rules_before << "->" << rules_after << " generators=" << generators
        << " skipped=" << skipped << " limit_hit=" << (limit_hit ? "yes" : "no")
        << " timed_out=" << (timed_out ? "yes" : "no") << " graph=" << vertices << "v/" << edges << "e"
        << " parse_ms=" << fixed(times.parse_ms) << " graph_ms=" << fixed(times.graph_ms)
        << " detect_ms=" << fixed(times.detect_ms) << " break_ms=" << fixed(times.break_ms);
    if (verified) {
        out << " verify_ms=" << fixed(times.verify_ms) << " verified=" << (*verified ? "PASS" : "FAIL");
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetry breaking for grounded smodels programs", "sbreak"};
    app.require_subcommand(1);

    // gen-php
    auto*       gen_php_cmd = app.add_subcommand("gen-php", "Generate a pigeon-hole program");
    PhpSpec     php;
    std::string php_out, php_manifest;
    gen_php_cmd->add_option("--pigeons", php.pigeons)->required();
    gen_php_cmd->add_option("--holes", php.holes)->required();
    gen_php_cmd->add_option("-o,--output", php_out);
    gen_php_cmd->add_option("--manifest", php_manifest, "Write the parameter sidecar here");

    // gen-house
    auto*                   gen_house_cmd = app.add_subcommand("gen-house", "Generate a cabinet assignment program");
    HouseSpec               house;
    std::optional<unsigned> house_cabinets;
    std::string             house_out, house_manifest, house_owned;
    gen_house_cmd->add_option("--persons", house.persons)->required();
    gen_house_cmd->add_option("--things", house.things_per_person, "Things per person");
    gen_house_cmd->add_option("--things-of", house_owned, "Comma separated thing counts per person");
    gen_house_cmd->add_option("--cabinets", house_cabinets, "Default: the fewest that suffice");
    gen_house_cmd->add_option("--capacity", house.cabinet_capacity);
    gen_house_cmd->add_option("--cabinet-cost", house.cabinet_cost, "Adds a minimize statement");
    gen_house_cmd->add_option("-o,--output", house_out);
    gen_house_cmd->add_option("--manifest", house_manifest, "Write the parameter sidecar here");

    // detect
    auto*       detect_cmd = app.add_subcommand("detect", "Print symmetry generators");
    std::string detect_in  = "-";
    std::string dimacs_out;
    SearchFlags detect_flags;
    detect_cmd->add_option("input", detect_in, "smodels file or - for standard input");
    detect_flags.add_to(*detect_cmd);
    detect_cmd->add_option("--dimacs", dimacs_out, "Also write the colored graph in DIMACS form");

    // break
    auto*       break_cmd = app.add_subcommand("break", "Append symmetry-breaking constraints");
    std::string break_in  = "-";
    SearchFlags break_flags;
    bool        ignore_minimize = false;
    bool        break_verify    = false;
    std::size_t break_atoms     = 96;
    break_cmd->add_option("input", break_in, "smodels file or - for standard input");
    break_flags.add_to(*break_cmd);
    break_cmd->add_flag("--ignore-minimize", ignore_minimize, "Leave minimize statements out of detection");
    break_cmd->add_flag("--verify", break_verify, "Check the result with the brute-force oracle");
    break_cmd->add_option("--atom-budget", break_atoms, "Oracle atom budget for --verify");

    // verify
    auto*         verify_cmd = app.add_subcommand("verify", "Detect, break and check against the oracle");
    std::string   verify_in  = "-";
    SearchFlags   verify_flags;
    std::size_t   verify_atoms = 96;
    std::uint64_t verify_nodes = OracleOptions{}.node_budget;
    verify_cmd->add_option("input", verify_in, "smodels file or - for standard input");
    verify_flags.add_to(*verify_cmd);
    verify_cmd->add_option("--atom-budget", verify_atoms, "Largest program the oracle accepts");
    verify_cmd->add_option("--oracle-nodes", verify_nodes, "Oracle search node budget");

    // bench
    auto*       bench_cmd = app.add_subcommand("bench", "Tabulate detection over generated instances");
    std::string bench_persons = "1-3";
    std::string bench_limits  = "none,default,5,10,20";
    unsigned    bench_things  = 2;
    unsigned    bench_spare   = 0;
    unsigned    bench_cap     = 2;
    std::optional<unsigned> bench_cost;
    double      bench_timeout = 10.0;
    bool        bench_verify  = false;
    std::size_t bench_atoms   = 64;
    std::uint64_t bench_seed  = 0;
    bench_cmd->add_option("--persons", bench_persons, "Range or list, e.g. 1-3 or 1,2,5");
    bench_cmd->add_option("--things", bench_things, "Things per person");
    bench_cmd->add_option("--spare-cabinets", bench_spare, "Cabinets beyond the fewest that suffice");
    bench_cmd->add_option("--capacity", bench_cap);
    bench_cmd->add_option("--cabinet-cost", bench_cost);
    bench_cmd->add_option("--limits", bench_limits, "Columns: none, default, and numeric caps");
    bench_cmd->add_option("--timeout", bench_timeout, "Detection timeout per cell in seconds");
    bench_cmd->add_option("--seed", bench_seed);
    bench_cmd->add_flag("--verify", bench_verify, "Add oracle model counts to each cell");
    bench_cmd->add_option("--atom-budget", bench_atoms, "Oracle atom budget for --verify");

    std::vector<std::string> argv_store{"sbreak"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_php_cmd) {
            emit(php_out, write_smodels(gen_php(php)), out);
            if (!php_manifest.empty()) {
                emit(php_manifest, manifest_line(php) + "\n", out);
            }
            return exit_ok;
        }

        if (*gen_house_cmd) {
            if (!house_owned.empty()) {
                house.things_of_person = parse_range(house_owned);
            }
            if (house_cabinets) {
                house.cabinets = *house_cabinets;
            }
            else {
                house.cabinets = 0;
                for (unsigned p = 0; p < house.persons; ++p) {
                    unsigned cap = std::max(1u, house.cabinet_capacity);
                    house.cabinets += (house.things_of(p) + cap - 1) / cap;
                }
            }
            if (!house.enough_cabinets()) {
                err << "warning: " << house.cabinets << " cabinets cannot hold every person's things separately\n";
            }
            emit(house_out, write_smodels(gen_house(house)), out);
            if (!house_manifest.empty()) {
                emit(house_manifest, manifest_line(house) + "\n", out);
            }
            return exit_ok;
        }

        if (*detect_cmd) {
            auto       t0    = Clock::now();
            auto       input = load(detect_in, in);
            const auto& prog = input.doc.program;
            double     parse_ms = ms_since(t0);
            t0                  = Clock::now();
            auto  graph         = build_graph(prog);
            double graph_ms     = ms_since(t0);
            t0                  = Clock::now();
            auto gens           = find_generators(graph, detect_flags.options());
            double detect_ms    = ms_since(t0);
            if (!dimacs_out.empty()) {
                std::ostringstream d;
                write_dimacs(graph, d);
                emit(dimacs_out, d.str(), out);
            }
            out << gens.size() << " generators\n";
            out << format_generators(gens);
            if (!gens.empty()) {
                out << "symbolic:\n";
                for (const auto& g : gens.generators) {
                    out << render_symbolic(prog, g) << '\n';
                }
            }
            out << "stats: vertices=" << graph.vertex_count << " edges=" << graph.edge_count()
                << " nodes=" << gens.stats.nodes << " limit_hit=" << (gens.stats.limit_hit ? "yes" : "no")
                << " timed_out=" << (gens.stats.timed_out ? "yes" : "no")
                << " budget_hit=" << (gens.stats.budget_hit ? "yes" : "no") << " parse_ms=" << fixed(parse_ms)
                << " graph_ms=" << fixed(graph_ms) << " detect_ms=" << fixed(detect_ms) << '\n';
            return exit_ok;
        }

        if (*break_cmd) {
            RunReport report;
            auto      t0    = Clock::now();
            auto      input = load(break_in, in);
            const Program& prog = input.doc.program;
            report.instance     = break_in;
            report.times.parse_ms = ms_since(t0);
            if (prog.has_minimize() && !ignore_minimize) {
                err << "note: minimize statements are never part of detection; they are copied to the output\n";
            }
            t0                    = Clock::now();
            auto graph            = build_graph(prog);
            report.times.graph_ms = ms_since(t0);
            t0                    = Clock::now();
            auto gens             = find_generators(graph, break_flags.options());
            report.times.detect_ms = ms_since(t0);
            auto used              = chainable(gens);
            t0                     = Clock::now();
            Program broken         = break_symmetries(prog, used);
            report.times.break_ms  = ms_since(t0);

            report.atoms_before = prog.max_atom;
            report.atoms_after  = broken.max_atom;
            report.rules_before = prog.rules.size();
            report.rules_after  = broken.rules.size();
            report.generators   = gens.size();
            report.skipped      = gens.size() - used.size();
            report.limit_hit    = gens.stats.limit_hit;
            report.timed_out    = gens.stats.timed_out;
            report.vertices     = graph.vertex_count;
            report.edges        = graph.edge_count();
            if (report.skipped) {
                err << "warning: skipped " << report.skipped << " generator(s) with cycles longer than 2\n";
            }
            if (prog.has_minimize()) {
                for (const auto& g : used) {
                    bool keeps = true;
                    for (const auto& r : prog.rules) {
                        if (r.kind != RuleKind::Minimize) {
                            continue;
                        }
                        Program just;
                        just.max_atom = prog.max_atom;
                        just.rules    = {r};
                        keeps         = keeps && programs_equal_modulo_rule_order(apply_permutation(just, g), just);
                    }
                    if (!keeps) {
                        err << "warning: a generator does not preserve the minimize weights; the optimum may change\n";
                        break;
                    }
                }
            }

            int code = exit_ok;
            if (break_verify) {
                t0 = Clock::now();
                OracleOptions oracle;
                oracle.atom_budget = break_atoms;
                auto verdict       = verify_program(prog, break_flags.options(), oracle);
                report.times.verify_ms = ms_since(t0);
                report.verified        = verdict.passed();
                if (!verdict.passed()) {
                    verdict.print(err);
                    code = exit_verification;
                }
            }
            if (used.empty()) {
                out << input.text;
            }
            else {
                SmodelsDocument doc = input.doc;
                doc.program         = std::move(broken);
                write_smodels(doc, out);
            }
            err << report.to_string() << '\n';
            return code;
        }

        if (*verify_cmd) {
            auto          input = load(verify_in, in);
            OracleOptions oracle;
            oracle.atom_budget = verify_atoms;
            oracle.node_budget = verify_nodes;
            auto report        = verify_program(input.doc.program, verify_flags.options(), oracle);
            report.print(out);
            return report.passed() ? exit_ok : exit_verification;
        }

        if (*bench_cmd) {
            auto persons = parse_range(bench_persons);
            auto columns = parse_limits(bench_limits);
            OracleOptions oracle;
            oracle.atom_budget = bench_atoms;

            out << "instance";
            for (const auto& c : columns) {
                out << '\t' << c.label();
            }
            out << '\n';
            for (unsigned p : persons) {
                HouseSpec spec;
                spec.persons           = p;
                spec.things_per_person = bench_things;
                spec.cabinet_capacity  = bench_cap;
                spec.cabinet_cost      = bench_cost;
                unsigned cap           = std::max(1u, bench_cap);
                spec.cabinets          = p * ((bench_things + cap - 1) / cap) + bench_spare;
                const Program prog     = gen_house(spec);
                const auto    graph    = build_graph(prog);
                std::string   before   = bench_verify ? models_cell(prog, oracle) : std::string();

                out << spec.name();
                for (const auto& c : columns) {
                    std::ostringstream cell;
                    if (c.kind == LimitColumn::None) {
                        cell << "0gen/" << fixed(0.0) << "ms/" << graph.vertex_count << "v";
                        if (bench_verify) {
                            cell << '/' << before;
                        }
                        out << '\t' << cell.str();
                        continue;
                    }
                    SearchOptions opt;
                    opt.seed        = bench_seed;
                    opt.time_budget = std::chrono::milliseconds(static_cast<long long>(bench_timeout * 1000.0));
                    if (c.kind == LimitColumn::Capped) {
                        opt.limit = c.value;
                    }
                    auto t0   = Clock::now();
                    auto gens = find_generators(graph, opt);
                    auto used = chainable(gens);
                    auto broken = break_symmetries(prog, used);
                    double ms   = ms_since(t0);
                    if (gens.stats.timed_out) {
                        out << "\tTO";
                        continue;
                    }
                    cell << gens.size() << "gen/" << fixed(ms) << "ms/" << graph.vertex_count << "v";
                    if (bench_verify) {
                        OracleOptions after_oracle = oracle;
                        after_oracle.atom_budget += broken.max_atom - prog.max_atom;
                        cell << '/' << before << "->" << models_cell(broken, after_oracle);
                    }
                    out << '\t' << cell.str();
                }
                out << '\n';
            }
            return exit_ok;
        }
    }
    catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const UnsupportedFeature& e) {
        err << "unsupported feature: " << e.what() << '\n';
        return exit_unsupported;
    }
    catch (const UnsupportedGenerator& e) {
        err << "unsupported generator: " << e.what() << '\n';
        return exit_unsupported;
    }
    catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const NonTightProgram& e) {
        err << "oracle cannot handle the program: " << e.what() << '\n';
        return exit_budget;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace sbreak::cli
