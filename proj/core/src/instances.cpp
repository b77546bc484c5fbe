#include <sbreak/errors.hpp>
#include <sbreak/instances.hpp>

#include <cstdio>
#include <numeric>
#include <sstream>

namespace sbreak {

unsigned HouseSpec::things_of(unsigned person) const {
    return things_of_person.empty() ? things_per_person : things_of_person.at(person);
}

unsigned HouseSpec::total_things() const {
    unsigned total = 0;
    for (unsigned p = 0; p < persons; ++p) {
        total += things_of(p);
    }
    return total;
}

bool HouseSpec::enough_cabinets() const {
    if (cabinet_capacity == 0) {
        return total_things() == 0;
    }
    unsigned needed = 0;
    for (unsigned p = 0; p < persons; ++p) {
        needed += (things_of(p) + cabinet_capacity - 1) / cabinet_capacity;
    }
    return needed <= cabinets;
}

std::string HouseSpec::name() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "empty_p%02ut%03u", persons, total_things());
    return buf;
}

HouseSpec worked_house_example() {
    HouseSpec s;
    s.persons          = 2;
    s.things_of_person = {3, 1};
    s.cabinets         = 4;
    s.cabinet_capacity = 2;
    return s;
}

namespace {

std::string term(const char* functor, unsigned a, unsigned b) {
    return std::string(functor) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void at_most_one_pairs(Program& prog, const std::vector<AtomId>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            prog.add_rule(Rule::integrity({pos(atoms[i]), pos(atoms[j])}));
        }
    }
}

std::vector<Literal> positives(const std::vector<AtomId>& atoms) {
    std::vector<Literal> out;
    for (AtomId a : atoms) {
        out.push_back(pos(a));
    }
    return out;
}

} // namespace

Program gen_php(const PhpSpec& spec) {
    if (spec.pigeons < 1 || spec.holes < 1) {
        throw PreconditionError("pigeon-hole instances need at least one pigeon and one hole");
    }
    Program prog;
    auto    in = [&](unsigned p, unsigned h) { return static_cast<AtomId>(2 + (p - 1) * spec.holes + (h - 1)); };
    for (unsigned p = 1; p <= spec.pigeons; ++p) {
        for (unsigned h = 1; h <= spec.holes; ++h) {
            prog.symbols[in(p, h)] = term("in", p, h);
        }
    }
    for (unsigned p = 1; p <= spec.pigeons; ++p) {
        std::vector<AtomId>  row;
        std::vector<Literal> none;
        for (unsigned h = 1; h <= spec.holes; ++h) {
            row.push_back(in(p, h));
            none.push_back(neg(in(p, h)));
        }
        prog.add_rule(Rule::choice(row, {}));
        prog.add_rule(Rule::integrity(none));
        at_most_one_pairs(prog, row);
    }
    for (unsigned h = 1; h <= spec.holes; ++h) {
        std::vector<AtomId> column;
        for (unsigned p = 1; p <= spec.pigeons; ++p) {
            column.push_back(in(p, h));
        }
        at_most_one_pairs(prog, column);
    }
    prog.compute_false.push_back(false_atom);
    return prog;
}

Program gen_house(const HouseSpec& spec) {
    if (spec.persons < 1 || spec.cabinets < 1) {
        throw PreconditionError("house instances need at least one person and one cabinet");
    }
    if (!spec.things_of_person.empty() && spec.things_of_person.size() != spec.persons) {
        throw PreconditionError("things_of_person must list one count per person");
    }
    for (unsigned p = 0; p < spec.persons; ++p) {
        if (spec.things_of(p) < 1) {
            throw PreconditionError("every person owns at least one thing");
        }
    }

    // Domain ids: persons 1..P, things next, cabinets after the things.
    const unsigned        things = spec.total_things();
    std::vector<unsigned> owner;
    for (unsigned p = 0; p < spec.persons; ++p) {
        owner.insert(owner.end(), spec.things_of(p), p);
    }
    auto thing_id   = [&](unsigned t) { return spec.persons + 1 + t; };
    auto cabinet_id = [&](unsigned c) { return spec.persons + things + 1 + c; };

    Program                          prog;
    AtomId                           next = 2;
    std::vector<std::vector<AtomId>> c2t(spec.cabinets, std::vector<AtomId>(things));
    std::vector<AtomId>              at_least(things), at_most(things);
    for (unsigned t = 0; t < things; ++t) {
        for (unsigned c = 0; c < spec.cabinets; ++c) {
            c2t[c][t]          = next++;
            prog.symbols[c2t[c][t]] = term("cabinetTOthing", cabinet_id(c), thing_id(t));
        }
        at_least[t] = next++;
        at_most[t]  = next++;
    }
    std::vector<AtomId> overflow(spec.cabinets), used(spec.cabinets);
    for (unsigned c = 0; c < spec.cabinets; ++c) {
        overflow[c] = next++;
    }
    if (spec.cabinet_cost) {
        for (unsigned c = 0; c < spec.cabinets; ++c) {
            used[c]               = next++;
            prog.symbols[used[c]] = "cabinetUsed(" + std::to_string(cabinet_id(c)) + ")";
        }
    }

    // 1 { cabinetTOthing(C,T) : cabinet(C) } 1 :- thing(T).
    for (unsigned t = 0; t < things; ++t) {
        std::vector<AtomId> options;
        for (unsigned c = 0; c < spec.cabinets; ++c) {
            options.push_back(c2t[c][t]);
        }
        prog.add_rule(Rule::choice(options, {}));
        prog.add_rule(Rule::cardinality(at_least[t], 1, positives(options)));
        prog.add_rule(Rule::integrity({neg(at_least[t])}));
        prog.add_rule(Rule::cardinality(at_most[t], 2, positives(options)));
        prog.add_rule(Rule::integrity({pos(at_most[t])}));
    }
    // :- cabinet(C), capacity+1 { cabinetTOthing(C,T) : thing(T) }.
    for (unsigned c = 0; c < spec.cabinets; ++c) {
        prog.add_rule(Rule::cardinality(overflow[c], spec.cabinet_capacity + 1, positives(c2t[c])));
        prog.add_rule(Rule::integrity({pos(overflow[c])}));
    }
    // Things of different persons never share a cabinet.
    for (unsigned c = 0; c < spec.cabinets; ++c) {
        for (unsigned t1 = 0; t1 < things; ++t1) {
            for (unsigned t2 = t1 + 1; t2 < things; ++t2) {
                if (owner[t1] != owner[t2]) {
                    prog.add_rule(Rule::integrity({pos(c2t[c][t1]), pos(c2t[c][t2])}));
                }
            }
        }
    }
    if (spec.cabinet_cost) {
        std::vector<Literal>       lits;
        std::vector<std::uint32_t> weights;
        for (unsigned c = 0; c < spec.cabinets; ++c) {
            for (unsigned t = 0; t < things; ++t) {
                prog.add_rule(Rule::basic(used[c], {pos(c2t[c][t])}));
            }
            lits.push_back(pos(used[c]));
            weights.push_back(*spec.cabinet_cost);
        }
        prog.add_rule(Rule::minimize(lits, weights));
    }
    prog.max_atom = std::max(prog.max_atom, next - 1);
    prog.compute_false.push_back(false_atom);
    return prog;
}

std::string manifest_line(const HouseSpec& spec) {
    std::ostringstream out;
    out << "name=" << spec.name() << " family=empty persons=" << spec.persons;
    if (spec.things_of_person.empty()) {
        out << " things_per_person=" << spec.things_per_person;
    }
    else {
        out << " things_of_person=";
        for (std::size_t i = 0; i < spec.things_of_person.size(); ++i) {
            out << (i ? "," : "") << spec.things_of_person[i];
        }
    }
    out << " cabinets=" << spec.cabinets << " capacity=" << spec.cabinet_capacity;
    if (spec.cabinet_cost) {
        out << " cabinet_cost=" << *spec.cabinet_cost;
    }
    return out.str();
}

std::string manifest_line(const PhpSpec& spec) {
    return "name=php_n" + std::to_string(spec.pigeons) + "m" + std::to_string(spec.holes) +
           " family=php pigeons=" + std::to_string(spec.pigeons) + " holes=" + std::to_string(spec.holes);
}

} // namespace sbreak
