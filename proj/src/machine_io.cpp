#include "tmlab/machine_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace tmlab {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Machine parse_machine(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::optional<std::string> blank, start;
    std::optional<std::vector<std::string>> symbols, states;
    std::optional<Machine> mach;
    struct Pending { int line; std::vector<std::string> toks; };

    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;

        if (toks[0] == "blank:" || toks[0] == "start:" || toks[0] == "symbols:" || toks[0] == "states:") {
            if (mach) throw ParseError(lineno, "header after transitions");
            if (toks[0] == "blank:") {
                if (toks.size() != 2) throw ParseError(lineno, "expected exactly one blank symbol");
                if (blank) throw ParseError(lineno, "duplicate blank header");
                blank = toks[1];
            } else if (toks[0] == "start:") {
                if (toks.size() != 2) throw ParseError(lineno, "expected exactly one start state");
                if (start) throw ParseError(lineno, "duplicate start header");
                start = toks[1];
            } else if (toks[0] == "symbols:") {
                if (toks.size() < 2) throw ParseError(lineno, "empty symbol list");
                if (symbols) throw ParseError(lineno, "duplicate symbols header");
                symbols = std::vector<std::string>(toks.begin() + 1, toks.end());
            } else {
                if (toks.size() < 2) throw ParseError(lineno, "empty state list");
                if (states) throw ParseError(lineno, "duplicate states header");
                states = std::vector<std::string>(toks.begin() + 1, toks.end());
            }
            continue;
        }

        // Transition line.
        if (!mach) {
            if (!blank) throw ParseError(lineno, "missing blank header");
            if (!start) throw ParseError(lineno, "missing start header");
            if (!symbols) throw ParseError(lineno, "missing symbols header");
            if (!states) throw ParseError(lineno, "missing states header");
            try {
                mach.emplace(*states, *symbols, *blank, *start);
            } catch (const MachineError& e) {
                throw ParseError(lineno, e.what());
            }
        }
        if (toks.size() != 6 || toks[2] != "->")
            throw ParseError(lineno, "expected '<state> <sym> -> <state|HALT> <sym> <L|R>'");
        if (toks[5] != "L" && toks[5] != "R")
            throw ParseError(lineno, "direction must be L or R");
        try {
            mach->set_action(toks[0], toks[1], toks[3], toks[4],
                             toks[5] == "L" ? Dir::L : Dir::R);
        } catch (const MachineError& e) {
            throw ParseError(lineno, e.what());
        }
    }

    if (!mach) {
        if (!blank || !start || !symbols || !states)
            throw ParseError(lineno, "incomplete machine file (missing headers)");
        mach.emplace(*states, *symbols, *blank, *start);
    }
    mach->validate();
    return std::move(*mach);
}

Machine load_machine(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open machine file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_machine(buf.str());
}

std::string serialize_machine(const Machine& mach) {
    std::ostringstream out;
    out << "blank: " << mach.symbol_name(mach.blank()) << "\n";
    out << "start: " << mach.state_name(mach.start()) << "\n";
    out << "symbols:";
    for (const auto& s : mach.symbols()) out << " " << s;
    out << "\n";
    out << "states:";
    for (const auto& s : mach.states()) out << " " << s;
    out << "\n";
    for (int32_t q = 0; q < mach.n(); ++q) {
        for (int32_t e = 0; e < mach.m(); ++e) {
            const auto& a = mach.action(q, e);
            if (!a) continue;
            out << mach.state_name(q) << " " << mach.symbol_name(e) << " -> "
                << (a->next == kHalt ? std::string("HALT") : mach.state_name(a->next)) << " "
                << mach.symbol_name(a->write) << " " << dir_char(a->dir) << "\n";
        }
    }
    return out.str();
}

void save_machine(const Machine& mach, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write machine file: " + path);
    f << serialize_machine(mach);
}

}  // namespace tmlab
