#include "tmlab/friedman.hpp"

#include <set>
#include <stdexcept>

namespace tmlab {

namespace {

std::string letter(int h) { return std::to_string(h); }

// Prime mark for letter h in segment II: 1' = -, 2' = $, 3' = +, h' beyond.
std::string prime(int h) {
    switch (h) {
        case 1: return "-";
        case 2: return "$";
        case 3: return "+";
        default: return std::to_string(h) + "'";
    }
}

class TableBuilder {
public:
    TableBuilder(std::vector<std::string> states, std::vector<std::string> symbols,
                 const std::string& blank, const std::string& start)
        : m_(std::move(states), std::move(symbols), blank, start) {}

    // "=" as write keeps the symbol unchanged.
    void row(const std::string& q, const std::vector<std::string>& syms,
             const std::string& write, Dir dir, const std::string& next) {
        int32_t qi = m_.state_index(q);
        int32_t nx = next == "HALT" ? kHalt : m_.state_index(next);
        for (const auto& s : syms) {
            int32_t e = m_.symbol_index(s);
            int32_t w = write == "=" ? e : m_.symbol_index(write);
            m_.set_action(qi, e, Action{nx, w, dir});
            listed_[qi].insert(e);
        }
    }

    // Covers every symbol not previously listed in this state's rows, minus
    // the excluded ones, which stay undefined.
    void wild(const std::string& q, const std::vector<std::string>& exclude,
              const std::string& write, Dir dir, const std::string& next) {
        int32_t qi = m_.state_index(q);
        int32_t nx = next == "HALT" ? kHalt : m_.state_index(next);
        std::set<int32_t> skip = listed_[qi];
        for (const auto& s : exclude) skip.insert(m_.symbol_index(s));
        for (int32_t e = 0; e < m_.m(); ++e) {
            if (skip.count(e)) continue;
            int32_t w = write == "=" ? e : m_.symbol_index(write);
            m_.set_action(qi, e, Action{nx, w, dir});
            listed_[qi].insert(e);
        }
    }

    Machine take() {
        m_.validate();
        return std::move(m_);
    }

private:
    Machine m_;
    std::map<int32_t, std::set<int32_t>> listed_;
};

}  // namespace

Machine generate_friedman(const FriedmanParams& params) {
    const int k = params.k;
    const bool X = params.delta == 0;  // marker X present
    if (k < 2) throw std::invalid_argument("generate_friedman: k must be >= 2");
    if (params.delta != 0 && params.delta != 1)
        throw std::invalid_argument("generate_friedman: delta must be 0 or 1");

    std::vector<std::string> symbols;
    symbols.push_back("Y");
    if (X) symbols.push_back("X");
    for (int h = 1; h <= k; ++h) symbols.push_back(letter(h));
    symbols.push_back("-");
    symbols.push_back("$");
    symbols.push_back("+");
    for (int h = 4; h <= k; ++h) symbols.push_back(prime(h));

    // Duplicated states carry an a/b phase for the double scan when the X
    // marker is absent.
    auto dup_a = [&](const std::string& s) { return X ? s : s + "a"; };
    auto dup_b = [&](const std::string& s) { return X ? s : s + "b"; };

    std::vector<std::string> states;
    auto add = [&](const std::string& s) { states.push_back(s); };
    auto add_dup = [&](const std::string& s) {
        if (X) {
            states.push_back(s);
        } else {
            states.push_back(s + "a");
            states.push_back(s + "b");
        }
    };
    add("q1-1");
    add("q1-2");
    add("q1-4");
    for (int h = 1; h <= k; ++h) add_dup("q1-C" + std::to_string(h));
    add_dup("q1-6");
    add("q1-7");
    add_dup("q1-9");
    add("q1-10");
    add("q1-11");
    add_dup("q2-1");
    add("q2-2");
    add("q2-3");
    add("q2-4");
    add("q3-1");
    add("q3-2");
    add("q3-3");
    add("q3-4");
    add("q3-5");
    add_dup("q4-1");
    add("q4-2");
    add_dup("q4-3");
    add("q4-4");
    add_dup("q5-0");
    add("q5-1");
    for (int h = 1; h <= k; ++h) add("q5-V" + std::to_string(h));
    for (int h = 1; h <= k; ++h) add("q5-K" + std::to_string(h));
    add("q5-2");
    add("q6-1");
    add("q6-2");
    add("q6-3");
    add("q7-1");
    add("q7-3");
    add("q7-4");
    add("q8-0");
    add("q8-1");
    add("q8-2");
    add("q9-1");
    add_dup("q9-4");

    // From the empty tape the X machine plants the marker in q1-4; without X
    // the search starts directly at the cut phase.
    TableBuilder t(states, symbols, "Y", X ? "q1-4" : "q3-1");

    std::vector<std::string> letters;
    for (int h = 1; h <= k; ++h) letters.push_back(letter(h));

    // 1. @I. Copy s from II to III, N/2 times, separated by +.
    t.row("q1-1", {"-"}, "1", Dir::R, "q1-2");
    t.row("q1-1", {"$", "+"}, "2", Dir::R, "q1-2");
    t.row("q1-1", {"1", "2"}, "=", Dir::R, "q1-1");
    t.row("q1-1", {"Y"}, "=", Dir::R, dup_a("q2-1"));

    t.row("q1-2", {"Y"}, "=", Dir::R, "q1-4");
    t.wild("q1-2", {}, "=", Dir::R, "q1-2");

    for (int h = 1; h <= k; ++h)
        t.row("q1-4", {prime(h)}, letter(h), Dir::R, dup_a("q1-C" + std::to_string(h)));
    t.row("q1-4", letters, "=", Dir::R, "q1-4");
    if (X) {
        t.row("q1-4", {"X"}, "=", Dir::R, "q1-7");
        t.row("q1-4", {"Y"}, "X", Dir::R, "q3-1");  // INIT, fires once
    } else {
        t.row("q1-4", {"Y"}, "=", Dir::R, "q1-7");
    }

    for (int h = 1; h <= k; ++h) {
        std::string c = "q1-C" + std::to_string(h);
        if (X) {
            t.row(c, {"Y"}, letter(h), Dir::L, "q1-6");
            t.wild(c, {}, "=", Dir::R, c);
        } else {
            t.row(c + "a", {"Y"}, "=", Dir::R, c + "b");
            t.wild(c + "a", {}, "=", Dir::R, c + "a");
            t.row(c + "b", {"Y"}, letter(h), Dir::L, "q1-6b");
            t.wild(c + "b", {}, "=", Dir::R, c + "b");
        }
    }

    if (X) {
        t.row("q1-6", {"Y"}, "=", Dir::R, "q1-4");
        t.wild("q1-6", {}, "=", Dir::L, "q1-6");
    } else {
        t.row("q1-6b", {"Y"}, "=", Dir::L, "q1-6a");
        t.wild("q1-6b", {}, "=", Dir::L, "q1-6b");
        t.row("q1-6a", {"Y"}, "=", Dir::R, "q1-4");
        t.wild("q1-6a", {}, "=", Dir::L, "q1-6a");
    }

    t.row("q1-7", {"Y"}, "+", Dir::L, dup_a("q1-9"));
    t.wild("q1-7", X ? std::vector<std::string>{"$", "X"} : std::vector<std::string>{"$"},
           "=", Dir::R, "q1-7");

    if (X) {
        t.row("q1-9", {"X", "Y", "-"}, "X", Dir::L, "q1-10");  // Y,-: merged q9-5
        t.wild("q1-9", {"$"}, "=", Dir::L, "q1-9");
    } else {
        t.row("q1-9a", {"Y"}, "=", Dir::L, "q1-10");
        t.wild("q1-9a", {"$"}, "=", Dir::L, "q1-9a");
        t.row("q1-9b", {"Y"}, "=", Dir::L, "q1-10");  // only entered after q9-4b
    }

    for (int h = 1; h <= k; ++h) t.row("q1-10", {letter(h)}, prime(h), Dir::L, "q1-10");
    t.row("q1-10", {"Y"}, "=", Dir::L, "q1-11");
    t.wild("q1-10", {"$"}, "=", Dir::L, "q1-10");

    t.row("q1-11", {"Y"}, "=", Dir::R, "q1-1");
    t.wild("q1-11", {}, "=", Dir::L, "q1-11");

    // 2. @II. Cut away left triangle in III.
    if (X) {
        t.row("q2-1", {"Y"}, "=", Dir::L, "q2-2");
        t.wild("q2-1", {}, "=", Dir::R, "q2-1");
    } else {
        t.row("q2-1a", {"Y"}, "=", Dir::R, "q2-1b");
        t.wild("q2-1a", {}, "=", Dir::R, "q2-1a");
        t.row("q2-1b", {"Y"}, "=", Dir::L, "q2-2");
        t.wild("q2-1b", {}, "=", Dir::R, "q2-1b");
    }

    t.row("q2-2", {X ? "X" : "Y"}, "=", Dir::R, "q3-1");
    t.row("q2-2", {"+"}, "$", Dir::R, "q2-3");
    t.wild("q2-2", X ? std::vector<std::string>{"Y"} : std::vector<std::string>{},
           "=", Dir::L, "q2-2");

    t.row("q2-3", letters, "-", Dir::R, "q2-4");
    t.row("q2-3", {"Y"}, "=", Dir::L, "q2-2");
    t.row("q2-3", {"-"}, "=", Dir::R, "q2-3");

    t.row("q2-4", {"-"}, "-", Dir::R, "q2-3");
    t.row("q2-4", {"Y"}, "=", Dir::L, "q2-2");
    t.wild("q2-4", X ? std::vector<std::string>{"+", "X"} : std::vector<std::string>{"+"},
           "=", Dir::R, "q2-4");

    // 3. @III. Cut away double right triangle in III.
    t.row("q3-1", {"$"}, "+", Dir::R, "q3-5");
    t.row("q3-1", {"Y"}, "=", Dir::L, dup_a("q4-1"));
    t.wild("q3-1", X ? std::vector<std::string>{"X"} : std::vector<std::string>{},
           "=", Dir::R, "q3-1");

    t.row("q3-5", {"Y"}, "=", Dir::L, dup_a("q4-1"));
    t.row("q3-5", {"-"}, "=", Dir::L, "q3-5");
    t.row("q3-5", {"+"}, "=", Dir::L, "q3-2");

    t.row("q3-2", letters, "-", Dir::L, "q3-3");
    t.wild("q3-2", X ? std::vector<std::string>{"X", "Y", "$"} : std::vector<std::string>{"Y", "$"},
           "=", Dir::L, "q3-2");

    t.row("q3-3", letters, "-", Dir::L, "q3-4");
    t.row("q3-3", {"Y"}, "=", Dir::R, dup_a("q9-4"));  // merged q9-3
    t.row("q3-3", {"-"}, "=", Dir::R, "q3-3");         // merged q9-3

    t.row("q3-4", {"-", "+"}, "=", Dir::L, "q3-2");
    t.row("q3-4", {X ? "X" : "Y"}, "=", Dir::R, "q3-1");
    t.wild("q3-4", X ? std::vector<std::string>{"Y", "$"} : std::vector<std::string>{"$"},
           "=", Dir::L, "q3-4");

    // 4. III@. Remove patterns in III while l can grow toward lmax.
    if (X) {
        t.row("q4-1", {"Y"}, "=", Dir::L, "q4-2");
        t.wild("q4-1", {}, "=", Dir::L, "q4-1");
    } else {
        t.row("q4-1a", {"Y"}, "=", Dir::L, "q4-1b");
        t.wild("q4-1a", {}, "=", Dir::L, "q4-1a");
        t.row("q4-1b", {"Y"}, "=", Dir::L, "q4-2");
        t.wild("q4-1b", {}, "=", Dir::L, "q4-1b");
    }

    t.row("q4-2", {"$"}, "+", Dir::R, dup_a("q4-3"));
    t.row("q4-2", {"2"}, k >= 3 ? "3" : "+", Dir::R, dup_a("q4-3"));
    {
        std::vector<std::string> skip = {"1", "-", "+"};
        if (k >= 3) skip.push_back("3");
        t.row("q4-2", skip, "=", Dir::L, "q4-2");
    }
    t.row("q4-2", {"Y"}, "=", Dir::R, dup_a("q5-0"));

    if (X) {
        t.row("q4-3", {"X"}, "=", Dir::R, "q4-4");
        t.wild("q4-3", {}, "=", Dir::R, "q4-3");
    } else {
        t.row("q4-3a", {"Y"}, "=", Dir::R, "q4-3b");
        t.wild("q4-3a", {}, "=", Dir::R, "q4-3a");
        t.row("q4-3b", {"Y"}, "=", Dir::R, "q4-4");
        t.wild("q4-3b", {}, "=", Dir::R, "q4-3b");
    }

    t.row("q4-4", {"+"}, "-", Dir::L, dup_a("q4-1"));
    t.wild("q4-4", X ? std::vector<std::string>{"X", "Y", "$"} : std::vector<std::string>{"Y", "$"},
           "-", Dir::R, "q4-4");

    // 5. Check patterns for a subword match.
    if (X) {
        t.row("q5-0", {"X"}, "=", Dir::R, "q5-1");
        t.wild("q5-0", {}, "=", Dir::R, "q5-0");
    } else {
        t.row("q5-0a", {"Y"}, "=", Dir::R, "q5-0b");
        t.wild("q5-0a", {}, "=", Dir::R, "q5-0a");
        t.row("q5-0b", {"Y"}, "=", Dir::R, "q5-1");
        t.wild("q5-0b", {}, "=", Dir::R, "q5-0b");
    }

    for (int h = 1; h <= k; ++h)
        t.row("q5-1", {letter(h)}, "-", Dir::R, "q5-V" + std::to_string(h));
    t.row("q5-1", {"-"}, "=", Dir::R, "q5-1");
    t.row("q5-1", {"+"}, "+", Dir::R, "q6-1");
    t.row("q5-1", {"Y"}, "=", Dir::L, "q6-2");

    for (int h = 1; h <= k; ++h) {
        std::string v = "q5-V" + std::to_string(h);
        std::string kk = "q5-K" + std::to_string(h);
        t.row(v, {"-", "+"}, "=", Dir::R, kk);
        t.row(v, {"Y"}, "=", Dir::L, "q5-2");
        t.wild(v, {}, "=", Dir::R, v);

        t.row(kk, {letter(h)}, "$", Dir::R, v);
        t.row(kk, {"+"}, "=", Dir::R, kk);
        t.row(kk, {"Y"}, "=", Dir::L, "q5-2");
        t.wild(kk, {}, "-", Dir::R, kk);
    }

    t.row("q5-2", {X ? "X" : "Y"}, "=", Dir::R, "q5-1");
    t.wild("q5-2", {}, "=", Dir::L, "q5-2");

    // 6. Clear III; a surviving $ marks a match.
    t.row("q6-1", {"Y"}, "=", Dir::L, "q6-2");
    t.wild("q6-1", {}, "=", Dir::R, "q6-1");

    t.row("q6-2", {"$"}, "Y", Dir::L, "q6-3");
    t.row("q6-2", {X ? "X" : "Y"}, "=", Dir::L, "q8-0");
    t.wild("q6-2", {}, "Y", Dir::L, "q6-2");

    t.row("q6-3", {X ? "X" : "Y"}, "=", Dir::L, "q7-1");
    t.wild("q6-3", {}, "Y", Dir::L, "q6-3");

    // 7. II@. s++; overflow past the left end of II halts.
    for (int h = 1; h < k; ++h) t.row("q7-1", {prime(h)}, prime(h + 1), Dir::L, "q7-3");
    t.row("q7-1", {prime(k)}, "-", Dir::L, "q7-1");  // carry
    t.row("q7-1", {"Y"}, "=", Dir::R, "HALT");

    t.row("q7-3", {"Y"}, "=", Dir::L, "q7-4");
    t.wild("q7-3", {}, "=", Dir::L, "q7-3");

    t.row("q7-4", {"Y"}, "=", Dir::R, "q1-1");
    t.wild("q7-4", {"-"}, "-", Dir::L, "q7-4");

    // 8. i := 0, lmax++.
    t.row("q8-0", {"Y"}, "=", Dir::L, "q8-1");
    t.wild("q8-0", {}, "=", Dir::L, "q8-0");

    t.row("q8-1", {"-", "$", "+"}, "=", Dir::L, "q8-1");
    t.row("q8-1", {"1"}, "-", Dir::L, "q8-1");
    t.row("q8-1", {"2"}, "$", Dir::L, "q8-1");
    if (k >= 3) t.row("q8-1", {"3"}, "+", Dir::L, "q8-1");
    t.row("q8-1", {"Y"}, "=", Dir::R, "q8-2");

    t.row("q8-2", {"-"}, "$", Dir::L, "q1-11");
    t.row("q8-2", {"Y"}, "=", Dir::L, "q9-1");
    t.wild("q8-2", {}, "=", Dir::R, "q8-2");

    // 9. Extend I, reset it, rebuild II as (1')^(N+2) with empty III.
    t.row("q9-1", {"Y"}, "-", Dir::R, "q3-3");  // continues in merged q9-3
    t.wild("q9-1", X ? std::vector<std::string>{"X"} : std::vector<std::string>{},
           "-", Dir::L, "q9-1");

    if (X) {
        t.row("q9-4", {"Y"}, "-", Dir::R, "q1-9");  // continues in merged q9-5
        t.wild("q9-4", {}, "-", Dir::R, "q9-4");
    } else {
        t.row("q9-4a", {"Y"}, "-", Dir::R, "q9-4b");
        t.wild("q9-4a", {}, "-", Dir::R, "q9-4a");
        t.row("q9-4b", {"Y"}, "-", Dir::R, "q1-9b");
    }

    return t.take();
}

}  // namespace tmlab
