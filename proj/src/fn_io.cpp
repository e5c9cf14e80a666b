#include "hypfn/fn_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "hypfn/errors.hpp"

namespace hypfn::fn {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

double parse_real(const std::string& s, std::size_t line, const char* what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError(std::string("invalid ") + what + " '" + s + "'", line);
    }
    return v;
}

std::size_t parse_index(const std::string& s, std::size_t line, const char* what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + s + "'", line);
    }
    return v;
}

// Reads the next non-blank line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_blank(line)) return true;
    }
    return false;
}

StructureGenerator parse_generator_line(const std::vector<std::string>& tok, std::size_t lineno) {
    if (tok.size() != 4) throw ParseError("expected 'generator v1 kind=<kind> n=<integer>'", lineno);
    if (tok[2].rfind("kind=", 0) != 0) throw ParseError("expected kind=<kind>", lineno);
    if (tok[3].rfind("n=", 0) != 0) throw ParseError("expected n=<integer>", lineno);
    GeneratorKind kind;
    try {
        kind = generator_kind_from_string(tok[2].substr(5));
    } catch (const UsageError& e) {
        throw ParseError(e.what(), lineno);
    }
    if (kind == GeneratorKind::Table) throw ParseError("kind=table is not a generator; use an fnstruct v1 file", lineno);
    const std::size_t n = parse_index(tok[3].substr(2), lineno, "n");
    if (n < 1) throw ParseError("n must be >= 1", lineno);
    return StructureGenerator::make(kind, static_cast<long>(n));
}

}  // namespace

StructureSource parse_structure(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("empty structure file", 1);
    const auto head = split_ws(line);
    if (head.size() >= 2 && head[0] == "generator") {
        if (head[1] != "v1") throw ParseError("unsupported generator version '" + head[1] + "'", lineno);
        auto g = parse_generator_line(head, lineno);
        if (next_line(in, line, lineno)) throw ParseError("unexpected content after generator spec", lineno);
        return g;
    }
    if (head.size() != 2 || head[0] != "fnstruct" || head[1] != "v1") {
        throw ParseError("expected header 'fnstruct v1' or 'generator v1 ...'", lineno);
    }
    std::vector<FNCoordinate> entries;
    while (next_line(in, line, lineno)) {
        const auto tok = split_ws(line);
        if (tok.size() != 3) throw ParseError("expected 'index length twist'", lineno);
        const std::size_t idx = parse_index(tok[0], lineno, "index");
        if (idx != entries.size() + 1) {
            throw ParseError("index " + tok[0] + " out of sequence (expected " + std::to_string(entries.size() + 1) + ")",
                             lineno);
        }
        const double length = parse_real(tok[1], lineno, "length");
        if (!(length > 0.0)) throw ParseError("length must be > 0", lineno);
        if (tok[2] == "-") {
            entries.push_back(FNCoordinate::boundary(length));
        } else {
            entries.push_back(FNCoordinate::interior(length, parse_real(tok[2], lineno, "twist")));
        }
    }
    if (entries.empty()) throw ParseError("structure has no curves", lineno);
    return StructureWindow::from_table(std::move(entries));
}

StructureSource read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return parse_structure(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

StructureWindow materialize(const StructureSource& src, std::size_t window) {
    if (const auto* w = std::get_if<StructureWindow>(&src)) {
        if (window != 0 && window != w->size()) {
            throw UsageError("window " + std::to_string(window) + " does not match table size " +
                             std::to_string(w->size()));
        }
        return *w;
    }
    const auto& g = std::get<StructureGenerator>(src);
    return StructureWindow::from_generator(g, window == 0 ? g.tail_start() : window);
}

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::string format_structure(const StructureWindow& w) {
    std::string out = "fnstruct v1\n";
    for (std::size_t i = 1; i <= w.size(); ++i) {
        const auto& c = w.at(i);
        out += std::to_string(i) + ' ' + format_real(c.length) + ' ' + (c.twist ? format_real(*c.twist) : "-") + '\n';
    }
    return out;
}

std::string format_generator(const StructureGenerator& g) {
    return "generator v1 kind=" + to_string(g.kind) + " n=" + std::to_string(g.n) + '\n';
}

PantsGraph parse_pants_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno) || split_ws(line) != std::vector<std::string>{"pantsgraph", "v1"}) {
        throw ParseError("expected header 'pantsgraph v1'", lineno ? lineno : 1);
    }
    PantsGraph g;
    while (next_line(in, line, lineno)) {
        const auto tok = split_ws(line);
        if (tok[0] == "curve") {
            if (tok.size() != 3 || (tok[2] != "boundary" && tok[2] != "interior")) {
                throw ParseError("expected 'curve <id> boundary|interior'", lineno);
            }
            const std::size_t id = parse_index(tok[1], lineno, "curve id");
            if (!g.curves.emplace(id, CurveInfo{tok[2] == "boundary"}).second) {
                throw ParseError("curve " + tok[1] + " declared twice", lineno);
            }
        } else if (tok[0] == "pants") {
            if (tok.size() != 5) throw ParseError("expected 'pants <id> <slot> <slot> <slot>'", lineno);
            PantsNode p;
            p.id = parse_index(tok[1], lineno, "pants id");
            for (std::size_t k = 0; k < 3; ++k) {
                p.slots[k] = tok[k + 2] == "cusp" ? Slot::cusp() : Slot::of(parse_index(tok[k + 2], lineno, "slot"));
            }
            g.pants.push_back(p);
        } else {
            throw ParseError("unknown record '" + tok[0] + "'", lineno);
        }
    }
    return g;
}

std::string format_pants_graph(const PantsGraph& g) {
    std::string out = "pantsgraph v1\n";
    for (const auto& [id, info] : g.curves) {
        out += "curve " + std::to_string(id) + (info.boundary ? " boundary\n" : " interior\n");
    }
    for (const auto& p : g.pants) {
        out += "pants " + std::to_string(p.id);
        for (const auto& s : p.slots) out += ' ' + (s.is_cusp() ? std::string("cusp") : std::to_string(*s.curve));
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hypfn::fn
