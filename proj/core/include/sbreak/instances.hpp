#pragma once

#include <sbreak/program.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sbreak {

struct PhpSpec {
    unsigned pigeons = 1;
    unsigned holes   = 1;
};

/// Cabinet assignment: every thing goes into exactly one cabinet, a cabinet
/// holds at most `cabinet_capacity` things, and things of different persons
/// never share a cabinet.
struct HouseSpec {
    unsigned persons           = 1;
    unsigned things_per_person = 1;
    unsigned cabinets          = 1;
    unsigned cabinet_capacity  = 2;
    /// Emits cabinetUsed atoms and a minimize statement when set.
    std::optional<unsigned> cabinet_cost;
    /// Per-person thing counts; overrides things_per_person when non-empty.
    std::vector<unsigned> things_of_person;

    unsigned things_of(unsigned person) const;
    unsigned total_things() const;
    /// Enough cabinets for every person to be served separately.
    bool enough_cabinets() const;
    /// Instance name, e.g. "empty_p05t025".
    std::string name() const;
};

/// Two persons owning three and one things, four cabinets of capacity two.
HouseSpec worked_house_example();

/// Atoms in(p,h); per pigeon a choice over holes, at least one and at most
/// one hole; per hole at most one pigeon.
Program gen_php(const PhpSpec& spec);

/// Grounded cabinet assignment program. Atom ids are thing-major:
/// cabinetTOthing(c,t) for every cabinet, followed by the thing's two
/// auxiliary count atoms; then one overflow atom per cabinet; then optional
/// cabinetUsed atoms.
Program gen_house(const HouseSpec& spec);

/// "key=value" sidecar describing the parameters.
std::string manifest_line(const HouseSpec& spec);
std::string manifest_line(const PhpSpec& spec);

} // namespace sbreak
