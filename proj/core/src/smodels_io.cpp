#include <sbreak/errors.hpp>
#include <sbreak/smodels_io.hpp>

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

namespace sbreak {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    std::size_t index() const { return index_; }

    std::string_view token() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError(ParseErrorKind::Truncated, index_, "unexpected end of input");
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            ++pos_;
        }
        ++index_;
        return text_.substr(start, pos_ - start);
    }

    std::uint32_t number() {
        std::size_t   at  = index_;
        auto          tok = token();
        std::uint64_t value{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > std::numeric_limits<std::uint32_t>::max()) {
            throw ParseError(ParseErrorKind::MalformedNumber, at, std::string(tok));
        }
        return static_cast<std::uint32_t>(value);
    }

    AtomId atom() {
        std::size_t at = index_;
        auto        a  = number();
        if (a == 0) {
            throw ParseError(ParseErrorKind::InvalidAtom, at, "atom 0");
        }
        return a;
    }

    // Remainder of the current line, trimmed; counts as one token.
    std::string rest_of_line() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
        }
        std::string_view line = text_.substr(start, pos_ - start);
        while (!line.empty() && is_space(line.back())) {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            throw ParseError(ParseErrorKind::Truncated, index_, "missing symbol name");
        }
        ++index_;
        return std::string(line);
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t      pos_   = 0;
    std::size_t      index_ = 0;
};

struct Counts {
    std::uint32_t lits;
    std::uint32_t neg;
};

Counts read_counts(Scanner& in) {
    auto lits   = in.number();
    auto neg_at = in.index();
    auto neg    = in.number();
    if (neg > lits) {
        throw ParseError(ParseErrorKind::NegativeExceedsLiterals, neg_at,
                         std::to_string(neg) + " > " + std::to_string(lits));
    }
    return {lits, neg};
}

std::vector<Literal> read_body(Scanner& in, const Counts& c) {
    std::vector<Literal> body;
    body.reserve(c.lits);
    for (std::uint32_t i = 0; i < c.lits; ++i) {
        body.push_back({in.atom(), i < c.neg});
    }
    return body;
}

std::vector<std::uint32_t> read_weights(Scanner& in, std::uint32_t n) {
    std::vector<std::uint32_t> w;
    w.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        w.push_back(in.number());
    }
    return w;
}

Rule read_rule(Scanner& in, std::uint32_t type, std::size_t type_at) {
    Rule r;
    switch (type) {
        case 1: {
            r.kind = RuleKind::Basic;
            r.heads.push_back(in.atom());
            r.body = read_body(in, read_counts(in));
            break;
        }
        case 2: {
            r.kind = RuleKind::Cardinality;
            r.heads.push_back(in.atom());
            auto c  = read_counts(in);
            r.bound = in.number();
            r.body  = read_body(in, c);
            break;
        }
        case 3: {
            r.kind       = RuleKind::Choice;
            auto n_heads = in.number();
            for (std::uint32_t i = 0; i < n_heads; ++i) {
                r.heads.push_back(in.atom());
            }
            r.body = read_body(in, read_counts(in));
            break;
        }
        case 5: {
            r.kind = RuleKind::Weight;
            r.heads.push_back(in.atom());
            r.bound   = in.number();
            auto c    = read_counts(in);
            r.body    = read_body(in, c);
            r.weights = read_weights(in, c.lits);
            break;
        }
        case 6: {
            r.kind      = RuleKind::Minimize;
            auto marker_at = in.index();
            if (in.number() != 0) {
                throw ParseError(ParseErrorKind::MalformedNumber, marker_at, "minimize marker must be 0");
            }
            auto c    = read_counts(in);
            r.body    = read_body(in, c);
            r.weights = read_weights(in, c.lits);
            break;
        }
        default: throw ParseError(ParseErrorKind::UnknownRuleType, type_at, std::to_string(type));
    }
    return r;
}

std::vector<AtomId> read_compute(Scanner& in, std::string_view header) {
    auto at  = in.index();
    auto tok = in.token();
    if (tok != header) {
        throw ParseError(ParseErrorKind::MissingComputeHeader, at, "expected " + std::string(header));
    }
    std::vector<AtomId> atoms;
    while (true) {
        auto a = in.number();
        if (a == 0) {
            break;
        }
        atoms.push_back(a);
    }
    return atoms;
}

void write_atoms(std::ostream& out, const Rule& r, bool negated) {
    for (const auto& l : r.body) {
        if (l.negated == negated) {
            out << ' ' << l.atom;
        }
    }
}

void write_body(std::ostream& out, const Rule& r) {
    write_atoms(out, r, true);
    write_atoms(out, r, false);
}

// Weights follow the literal order used on disk (negatives, then positives).
void write_weights(std::ostream& out, const Rule& r) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (r.body[i].negated == (pass == 0)) {
                out << ' ' << (i < r.weights.size() ? r.weights[i] : 1u);
            }
        }
    }
}

} // namespace

SmodelsDocument parse_smodels(std::string_view text) {
    Scanner         in(text);
    SmodelsDocument doc;
    Program&        prog = doc.program;

    while (true) {
        auto type_at = in.index();
        auto type    = in.number();
        if (type == 0) {
            break;
        }
        prog.add_rule(read_rule(in, type, type_at));
    }

    while (true) {
        auto id_at = in.index();
        auto id    = in.number();
        if (id == 0) {
            break;
        }
        auto name = in.rest_of_line();
        if (!prog.symbols.emplace(id, std::move(name)).second) {
            throw ParseError(ParseErrorKind::DuplicateSymbol, id_at, std::to_string(id));
        }
        doc.symbol_order.push_back(id);
        prog.max_atom = std::max(prog.max_atom, id);
    }

    prog.compute_true  = read_compute(in, "B+");
    prog.compute_false = read_compute(in, "B-");
    for (AtomId a : prog.compute_true) {
        prog.max_atom = std::max(prog.max_atom, a);
    }
    for (AtomId a : prog.compute_false) {
        prog.max_atom = std::max(prog.max_atom, a);
    }
    prog.model_count_request = in.number();

    while (!in.at_end()) {
        doc.trailing_tokens.emplace_back(in.token());
    }
    return doc;
}

SmodelsDocument read_smodels(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_smodels(text);
}

std::string format_rule(const Rule& r) {
    std::ostringstream out;
    const auto         n   = r.body.size();
    const auto         neg = r.negative_count();
    switch (r.kind) {
        case RuleKind::Basic:
            out << "1 " << r.heads.at(0) << ' ' << n << ' ' << neg;
            write_body(out, r);
            break;
        case RuleKind::Cardinality:
            out << "2 " << r.heads.at(0) << ' ' << n << ' ' << neg << ' ' << r.bound;
            write_body(out, r);
            break;
        case RuleKind::Choice:
            out << "3 " << r.heads.size();
            for (AtomId h : r.heads) {
                out << ' ' << h;
            }
            out << ' ' << n << ' ' << neg;
            write_body(out, r);
            break;
        case RuleKind::Weight:
            out << "5 " << r.heads.at(0) << ' ' << r.bound << ' ' << n << ' ' << neg;
            write_body(out, r);
            write_weights(out, r);
            break;
        case RuleKind::Minimize:
            out << "6 0 " << n << ' ' << neg;
            write_body(out, r);
            write_weights(out, r);
            break;
    }
    return out.str();
}

void write_smodels(const SmodelsDocument& doc, std::ostream& out) {
    const Program& prog = doc.program;
    for (const auto& r : prog.rules) {
        out << format_rule(r) << '\n';
    }
    out << "0\n";

    // Keep the file order of symbols when it still describes the table.
    std::vector<AtomId> order = doc.symbol_order;
    bool                same  = order.size() == prog.symbols.size() &&
                 std::all_of(order.begin(), order.end(), [&](AtomId a) { return prog.symbols.contains(a); });
    if (!same) {
        order.clear();
        for (const auto& [id, name] : prog.symbols) {
            order.push_back(id);
        }
    }
    for (AtomId id : order) {
        out << id << ' ' << prog.symbols.at(id) << '\n';
    }
    out << "0\nB+\n";
    for (AtomId a : prog.compute_true) {
        out << a << '\n';
    }
    out << "0\nB-\n";
    for (AtomId a : prog.compute_false) {
        out << a << '\n';
    }
    out << "0\n" << prog.model_count_request << '\n';
    if (!doc.trailing_tokens.empty()) {
        for (std::size_t i = 0; i < doc.trailing_tokens.size(); ++i) {
            out << (i ? " " : "") << doc.trailing_tokens[i];
        }
        out << '\n';
    }
}

std::string write_smodels(const SmodelsDocument& doc) {
    std::ostringstream out;
    write_smodels(doc, out);
    return out.str();
}

std::string write_smodels(const Program& program) {
    return write_smodels(SmodelsDocument{program, {}, {}});
}

std::string render_symbolic(const Program& program, const Permutation& p) {
    std::ostringstream out;
    bool               first = true;
    for (const auto& cycle : p.cycles()) {
        out << (first ? "(" : " (");
        first = false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            out << (i ? " " : "") << program.name_of(cycle[i]);
        }
        out << ')';
    }
    return out.str();
}

} // namespace sbreak
