#pragma once

#include <sbreak/program.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sbreak {

/// A parsed smodels file.
///
/// `symbol_order` remembers the order of the symbol table lines so an
/// unmodified document writes back token-identical. Anything after the
/// model-count line is kept verbatim in `trailing_tokens`.
struct SmodelsDocument {
    Program                  program;
    std::vector<AtomId>      symbol_order;
    std::vector<std::string> trailing_tokens;
};

/// Reads the numeric smodels format:
///
///     rules ... 0
///     id name ... 0
///     B+ atoms ... 0
///     B- atoms ... 0
///     model-count
///
/// Rule layouts (by leading type tag):
///
///     1 head #lits #neg neg... pos...
///     2 head #lits #neg bound neg... pos...
///     3 #heads heads... #lits #neg neg... pos...
///     5 head bound #lits #neg neg... pos... weights...
///     6 0 #lits #neg neg... pos... weights...
///
/// Throws ParseError carrying the 0-based index of the offending token.
SmodelsDocument parse_smodels(std::string_view text);
SmodelsDocument read_smodels(std::istream& in);

/// One rule per line, single spaces, sections in canonical order.
std::string write_smodels(const SmodelsDocument& doc);
std::string write_smodels(const Program& program);
void        write_smodels(const SmodelsDocument& doc, std::ostream& out);

/// The numeric line for a single rule, without a trailing newline.
std::string format_rule(const Rule& rule);

/// Cycle notation using symbol names where known, e.g.
/// "(c2t(53,5) c2t(52,5)) (44 45)". Identity renders as "".
std::string render_symbolic(const Program& program, const Permutation& p);

} // namespace sbreak
