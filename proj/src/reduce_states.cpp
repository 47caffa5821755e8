#include <map>
#include <set>
#include <stdexcept>

#include "tmlab/reduce.hpp"

namespace tmlab {

namespace {

Dir flip(Dir d) { return d == Dir::L ? Dir::R : Dir::L; }

std::string tuple3(const std::string& a, const std::string& b, const std::string& c) {
    return "[" + a + "," + b + "," + c + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// |Q'| = 3
// ---------------------------------------------------------------------------

ReducedMachine reduce_states_3(const Machine& orig) {
    orig.validate();
    const int n = orig.n();
    const int m = orig.m();

    // E' = (Q ∪ {0}) × {L,R,X} × E, with the q component in unary transfer.
    auto sym = [&](int q, char d, int e) {
        return tuple3(std::to_string(q), std::string(1, d), orig.symbol_name(e));
    };
    std::vector<std::string> symbols;
    for (int q = 0; q <= n; ++q)
        for (char d : {'L', 'R', 'X'})
            for (int e = 0; e < m; ++e) symbols.push_back(sym(q, d, e));

    Machine out({"qX", "qL", "qR"}, symbols, sym(0, 'X', orig.blank()), "qX");

    for (int e = 0; e < m; ++e) {
        for (char d : {'L', 'R'}) {
            Dir dd = d == 'L' ? Dir::L : Dir::R;
            // (1) unary transfer: decrement and move toward d.
            for (int q = 1; q <= n; ++q)
                out.set_action("qX", sym(q, d, e), d == 'L' ? "qL" : "qR", sym(q - 1, d, e), dd);
            // (4) release the finished cell and move over.
            out.set_action("qX", sym(0, d, e), "qX", sym(0, 'X', e), dd);
        }
        // (2)/(3) bounce at the transfer target.
        for (int q = 0; q <= n - 1; ++q) {
            out.set_action("qL", sym(q, 'X', e), "qX", sym(q + 1, 'X', e), Dir::R);
            out.set_action("qR", sym(q, 'X', e), "qX", sym(q + 1, 'X', e), Dir::L);
        }
        // (5) expansion, with the immediate first decrement of the pending
        // state; q = 0 covers the first step from the blank tape.
        for (int q = 0; q <= n; ++q) {
            int32_t oq = q == 0 ? orig.start() : q - 1;
            const auto& a = orig.action(oq, e);
            if (!a) continue;
            if (a->next == kHalt) {
                out.set_action("qX", sym(q, 'X', e), "HALT", sym(0, 'X', a->write), a->dir);
            } else {
                out.set_action("qX", sym(q, 'X', e), a->dir == Dir::L ? "qL" : "qR",
                               sym(a->next, dir_char(a->dir), a->write), a->dir);
            }
        }
    }

    ClaimedBounds claimed{3, 3LL * (n + 1) * m};
    if (out.m() > claimed.symbols)
        throw InvariantViolation("reduce_states_3: symbol count exceeds the claimed bound");

    DecoderCertificate cert;
    cert.kind = DecoderCertificate::Kind::TupleField;
    cert.original_blank = orig.symbol_name(orig.blank());
    for (int q = 0; q <= n; ++q)
        for (char d : {'L', 'R', 'X'})
            for (int e = 0; e < m; ++e) cert.symbol_map[sym(q, d, e)] = orig.symbol_name(e);

    out.validate();
    return ReducedMachine{std::move(out), std::move(cert), claimed};
}

// ---------------------------------------------------------------------------
// |Q'| = 2b+1
// ---------------------------------------------------------------------------

namespace {

int digits_needed(int base, int n) {
    int l = 1;
    long long cap = base;
    while (cap < n) {
        cap *= base;
        ++l;
    }
    return l;
}

}  // namespace

ReducedMachine reduce_states_2b1(const Machine& orig, int base) {
    if (base < 2) throw std::invalid_argument("reduce_states_2b1: base must be >= 2");
    orig.validate();
    const int n = orig.n();
    const int m = orig.m();
    const int l = digits_needed(base, n);

    auto code_of = [&](int q) {
        std::string s(static_cast<size_t>(l), '0');
        for (int j = l - 1; j >= 0; --j) {
            s[static_cast<size_t>(j)] = static_cast<char>('0' + q % base);
            q /= base;
        }
        return s;  // most significant digit first
    };
    auto sym = [&](const std::string& field, char flag, int e) {
        return tuple3(field.empty() ? "-" : field, std::string(1, flag), orig.symbol_name(e));
    };

    // Reachable symbols only; fields are suffixes (L transfers) or prefixes
    // (R transfers) of state codes plus the assembled full codes.
    std::set<std::string> fields_idle = {""};
    std::set<std::string> fields_l = {""}, fields_r = {""};
    for (int q = 0; q < n; ++q) fields_idle.insert(code_of(q));
    for (int q = 0; q < n; ++q) {
        for (int e = 0; e < m; ++e) {
            const auto& a = orig.action(q, e);
            if (!a || a->next == kHalt) continue;
            std::string c = code_of(a->next);
            if (a->dir == Dir::L) {
                for (int cut = 1; cut <= l - 1; ++cut) {
                    fields_l.insert(c.substr(static_cast<size_t>(cut)));   // source remainder
                    fields_idle.insert(c.substr(0, static_cast<size_t>(cut)));  // target partial
                }
            } else {
                for (int cut = 1; cut <= l - 1; ++cut) {
                    fields_r.insert(c.substr(0, c.size() - static_cast<size_t>(cut)));
                    fields_idle.insert(c.substr(c.size() - static_cast<size_t>(cut)));
                }
            }
        }
    }

    std::vector<std::string> symbols;
    std::map<std::string, std::string> to_original;
    auto emit = [&](const std::string& name, int e) {
        symbols.push_back(name);
        to_original[name] = orig.symbol_name(e);
    };
    for (const auto& f : fields_idle)
        for (int e = 0; e < m; ++e) emit(sym(f, '-', e), e);
    for (const auto& f : fields_l)
        for (int e = 0; e < m; ++e) emit(sym(f, 'L', e), e);
    for (const auto& f : fields_r)
        for (int e = 0; e < m; ++e) emit(sym(f, 'R', e), e);

    std::vector<std::string> states = {"qX"};
    for (int i = 0; i < base; ++i) states.push_back("qL" + std::to_string(i));
    for (int i = 0; i < base; ++i) states.push_back("qR" + std::to_string(i));

    Machine out(states, symbols, sym("", '-', orig.blank()), "qX");

    auto expansion = [&](const std::string& from_sym, int oq, int e) {
        const auto& a = orig.action(oq, e);
        if (!a) return;
        if (a->next == kHalt) {
            out.set_action("qX", from_sym, "HALT", sym("", '-', a->write), a->dir);
            return;
        }
        std::string c = code_of(a->next);
        if (a->dir == Dir::L) {
            // shed the most significant digit toward the left neighbour
            out.set_action("qX", from_sym, std::string("qL") + c[0],
                           sym(c.substr(1), 'L', a->write), Dir::L);
        } else {
            out.set_action("qX", from_sym, std::string("qR") + c.back(),
                           sym(c.substr(0, c.size() - 1), 'R', a->write), Dir::R);
        }
    };

    for (int e = 0; e < m; ++e) {
        // (3) expansion on an assembled code; the blank field bootstraps the
        // start state on the first step.
        for (int q = 0; q < n; ++q) expansion(sym(code_of(q), '-', e), q, e);
        expansion(sym("", '-', e), orig.start(), e);

        // (2) shed the next digit / clean up when no digit remains.
        for (const auto& f : fields_l) {
            if (f.empty()) {
                out.set_action("qX", sym("", 'L', e), "qX", sym("", '-', e), Dir::L);
            } else {
                out.set_action("qX", sym(f, 'L', e), std::string("qL") + f[0],
                               sym(f.substr(1), 'L', e), Dir::L);
            }
        }
        for (const auto& f : fields_r) {
            if (f.empty()) {
                out.set_action("qX", sym("", 'R', e), "qX", sym("", '-', e), Dir::R);
            } else {
                out.set_action("qX", sym(f, 'R', e), std::string("qR") + f.back(),
                               sym(f.substr(0, f.size() - 1), 'R', e), Dir::R);
            }
        }

        // (1) deposit at the target cell and bounce back. Arriving from the
        // right (qL) appends, arriving from the left (qR) prepends, so the
        // digit string is preserved.
        for (const auto& f : fields_idle) {
            if (static_cast<int>(f.size()) >= l) continue;
            for (int i = 0; i < base; ++i) {
                char dg = static_cast<char>('0' + i);
                std::string app = f + dg, pre = dg + f;
                if (fields_idle.count(app))
                    out.set_action("qL" + std::to_string(i), sym(f, '-', e), "qX",
                                   sym(app, '-', e), Dir::R);
                if (fields_idle.count(pre))
                    out.set_action("qR" + std::to_string(i), sym(f, '-', e), "qX",
                                   sym(pre, '-', e), Dir::L);
            }
        }
    }

    // Thm bound: |E'| <= (n(b+1)/(b-1) + 2(l-1) + (b^l-1)/(b-1)) * m, exact
    // comparison via the common denominator b-1.
    long long pbl = 1;
    for (int i = 0; i < l; ++i) pbl *= base;
    long long numer = static_cast<long long>(m) *
                      (static_cast<long long>(n) * (base + 1) +
                       static_cast<long long>(base - 1) * 2 * (l - 1) + (pbl - 1));
    ClaimedBounds claimed{2LL * base + 1, numer / (base - 1)};
    if (static_cast<long long>(out.m()) * (base - 1) > numer)
        throw InvariantViolation("reduce_states_2b1: symbol count exceeds the claimed bound");

    DecoderCertificate cert;
    cert.kind = DecoderCertificate::Kind::TupleField;
    cert.original_blank = orig.symbol_name(orig.blank());
    cert.symbol_map = std::move(to_original);

    out.validate();
    return ReducedMachine{std::move(out), std::move(cert), claimed};
}

// ---------------------------------------------------------------------------
// |Q'| = 2 (seeded and empty-tape variants)
// ---------------------------------------------------------------------------

namespace {

ReducedMachine reduce_states_2_impl(const Machine& orig, bool empty_tape) {
    orig.validate();
    const int n = orig.n();
    const int m = orig.m();
    const int counter_max = empty_tape ? n + 1 : n;  // inclusive

    auto flag_name = [](char side, bool fresh) {
        return std::string(1, side) + (fresh ? "n" : "o");
    };
    auto sym = [&](int c, const std::string& flag, int e) {
        return tuple3(std::to_string(c), flag, orig.symbol_name(e));
    };

    std::vector<std::string> symbols;
    std::map<std::string, std::string> to_original;
    for (int c = 0; c <= counter_max; ++c)
        for (const std::string& f : {std::string("-"), std::string("Ln"), std::string("Lo"),
                                     std::string("Rn"), std::string("Ro")})
            for (int e = 0; e < m; ++e) {
                symbols.push_back(sym(c, f, e));
                to_original[symbols.back()] = orig.symbol_name(e);
            }

    const auto& start_action = orig.action(orig.start(), orig.blank());
    if (empty_tape && !start_action)
        throw std::invalid_argument("reduce_states_2_empty: (start, blank) must be defined");

    // Empty variant starts in the direction of the original first move; the
    // seeded variant starts in L on the seed.
    std::string start_state = "L";
    if (empty_tape) start_state = start_action->dir == Dir::L ? "L" : "R";

    Machine out({"L", "R"}, symbols, sym(0, "-", orig.blank()), start_state);

    auto other = [](const std::string& s) { return s == "L" ? std::string("R") : std::string("L"); };

    // Expansion (5): state X reading [c, X̄_new, e]. The worked trace runs the
    // simulation mirrored: the new pair extends opposite the original move.
    auto expansion = [&](const std::string& X, const std::string& from_sym, int oq, int e) {
        const auto& a = orig.action(oq, e);
        if (!a) return;
        if (a->next == kHalt) {
            out.set_action(X, from_sym, "HALT", sym(0, "-", a->write), flip(a->dir));
            return;
        }
        std::string M = a->dir == Dir::L ? "R" : "L";  // mirrored side
        out.set_action(X, from_sym, M, sym(a->next, M + "o", a->write),
                       M == "L" ? Dir::L : Dir::R);
    };

    for (const std::string& X : {std::string("L"), std::string("R")}) {
        std::string Xb = other(X);
        Dir to_other = X == "L" ? Dir::R : Dir::L;
        for (int e = 0; e < m; ++e) {
            // (1) activate a blank neighbour.
            out.set_action(X, sym(0, "-", e), Xb, sym(1, flag_name(X[0], true), e), to_other);
            // (2) count the fresh cell up.
            for (int c = 1; c <= counter_max - 1; ++c)
                out.set_action(X, sym(c, flag_name(X[0], true), e), Xb,
                               sym(c + 1, flag_name(X[0], true), e), to_other);
            // (3) count the old cell down.
            for (int c = 1; c <= n; ++c)
                out.set_action(X, sym(c, flag_name(Xb[0], false), e), Xb,
                               sym(c - 1, flag_name(Xb[0], false), e), to_other);
            // (4) release the old cell.
            out.set_action(X, sym(0, flag_name(Xb[0], false), e), X, sym(0, "-", e), to_other);
            // (5) expansion of an arrived state.
            for (int c = 1; c <= n; ++c)
                expansion(X, sym(c, flag_name(Xb[0], true), e), c - 1, e);
        }
    }

    if (empty_tape) {
        // Overflow bootstrap on the blank symbol: in the start-direction state
        // the overflowed cell acts as the start state, in the other as blank.
        std::string X = start_state, Xb = other(X);
        int eb = orig.blank();
        expansion(X, sym(n + 1, flag_name(X[0], true), eb), orig.start(), eb);
        out.set_action(Xb, sym(n + 1, flag_name(Xb[0], true), eb), X,
                       sym(1, flag_name(Xb[0], true), eb), Xb == "L" ? Dir::R : Dir::L);
    }

    ClaimedBounds claimed{2, 5LL * m * (empty_tape ? n + 2 : n + 1)};
    if (out.m() > claimed.symbols)
        throw InvariantViolation("reduce_states_2: symbol count exceeds the claimed bound");

    DecoderCertificate cert;
    cert.kind = DecoderCertificate::Kind::SeededTwoState;
    cert.original_blank = orig.symbol_name(orig.blank());
    cert.symbol_map = std::move(to_original);
    cert.mirrored = true;
    cert.mirror_origin = 0;
    if (empty_tape) {
        cert.overflow_counter = n + 1;
    } else {
        cert.needs_seed = true;
        cert.seed_pos = 0;
        cert.seed_symbol = sym(orig.start() + 1, "Rn", orig.blank());
    }

    out.validate();
    return ReducedMachine{std::move(out), std::move(cert), claimed};
}

}  // namespace

ReducedMachine reduce_states_2_seeded(const Machine& orig) {
    return reduce_states_2_impl(orig, false);
}

ReducedMachine reduce_states_2_empty(const Machine& orig) {
    return reduce_states_2_impl(orig, true);
}

}  // namespace tmlab
