#include <algorithm>
#include <map>

#include "tmlab/friedman.hpp"
#include "tmlab/words.hpp"

namespace tmlab {

namespace {

struct SymbolRoles {
    int32_t y = -1, x = -1, dash = -1, dollar = -1, plus = -1;
    std::map<int32_t, int> letter_of;  // symbol index -> letter value (primes resolve)
    std::map<int32_t, int> raw_letter; // unprimed letters only
    int k = 0;
    bool ok = false;
};

SymbolRoles classify(const Machine& mach) {
    SymbolRoles r;
    for (int32_t e = 0; e < mach.m(); ++e) {
        const std::string& name = mach.symbol_name(e);
        if (name == "Y") r.y = e;
        else if (name == "X") r.x = e;
        else if (name == "-") { r.dash = e; r.letter_of[e] = 1; }
        else if (name == "$") { r.dollar = e; r.letter_of[e] = 2; }
        else if (name == "+") { r.plus = e; r.letter_of[e] = 3; }
        else if (name.size() >= 2 && name.back() == '\'') {
            r.letter_of[e] = std::stoi(name.substr(0, name.size() - 1));
        } else {
            int v = 0;
            for (char c : name) {
                if (c < '0' || c > '9') { v = -1; break; }
                v = v * 10 + (c - '0');
            }
            if (v <= 0) return r;
            r.letter_of[e] = v;
            r.raw_letter[e] = v;
            r.k = std::max(r.k, v);
        }
    }
    r.ok = r.y >= 0 && r.dash >= 0 && r.dollar >= 0 && r.plus >= 0 && r.k >= 2 &&
           r.y == mach.blank();
    return r;
}

SegmentView malformed(const std::string& why) {
    SegmentView v;
    v.wellformed = false;
    v.diagnostics = why;
    return v;
}

}  // namespace

SegmentView decode_segments(const Machine& mach, const Configuration& config) {
    SymbolRoles roles = classify(mach);
    if (!roles.ok) return malformed("machine symbols do not follow the Y/X/letter/prime roles");
    const bool with_x = roles.x >= 0;

    auto [lo, hi] = config.tape.support();
    if (lo > hi) return malformed("empty tape");

    // Maximal non-blank runs over the support.
    std::vector<std::pair<int64_t, int64_t>> runs;
    int64_t pos = lo;
    while (pos <= hi) {
        while (pos <= hi && config.tape.get(pos) == roles.y) ++pos;
        if (pos > hi) break;
        int64_t start = pos;
        while (pos <= hi && config.tape.get(pos) != roles.y) ++pos;
        runs.emplace_back(start, pos - 1);
    }

    auto cells = [&](std::pair<int64_t, int64_t> run) {
        std::vector<int32_t> out;
        for (int64_t p = run.first; p <= run.second; ++p) out.push_back(config.tape.get(p));
        return out;
    };

    std::vector<int32_t> seg1, seg2, seg3;
    if (with_x) {
        if (runs.size() != 2) return malformed("expected two runs (I and II|X|III)");
        if (runs[1].first - runs[0].second != 2) return malformed("I/II gap is not one Y");
        seg1 = cells(runs[0]);
        auto rest = cells(runs[1]);
        auto xit = std::find(rest.begin(), rest.end(), roles.x);
        if (xit == rest.end()) return malformed("missing X marker");
        if (std::find(xit + 1, rest.end(), roles.x) != rest.end())
            return malformed("more than one X marker");
        seg2.assign(rest.begin(), xit);
        seg3.assign(xit + 1, rest.end());
    } else {
        if (runs.size() != 2 && runs.size() != 3)
            return malformed("expected two or three runs (I, II, III)");
        if (runs[1].first - runs[0].second != 2) return malformed("I/II gap is not one Y");
        if (runs.size() == 3 && runs[2].first - runs[1].second != 2)
            return malformed("II/III gap is not one Y");
        seg1 = cells(runs[0]);
        seg2 = cells(runs[1]);
        if (runs.size() == 3) seg3 = cells(runs[2]);
    }
    if (seg2.empty()) return malformed("empty segment II");

    SegmentView v;
    v.wellformed = true;
    v.imax = static_cast<int64_t>(seg1.size());
    for (int32_t c : seg1) {
        if (c == roles.dash) continue;
        else if (c == roles.dollar) v.lmax += 1;
        else if (c == roles.plus) { v.l += 1; v.lmax += 1; }
        else if (roles.raw_letter.count(c)) {
            int lv = roles.raw_letter.at(c);
            if (lv > 3) return malformed("letter > 3 in segment I");
            v.i += 1;
            if (lv >= 2) v.lmax += 1;
            if (lv == 3) v.l += 1;
        } else {
            return malformed("unexpected symbol in segment I");
        }
    }
    for (int32_t c : seg2) {
        auto it = roles.letter_of.find(c);
        if (it == roles.letter_of.end()) return malformed("unexpected symbol in segment II");
        v.word.push_back(static_cast<char>('0' + it->second));
    }
    std::string cur;
    for (int32_t c : seg3) {
        if (c == roles.plus) {
            v.copies.push_back(cur);
            cur.clear();
        } else {
            cur += mach.symbol_name(c);
        }
    }
    if (!cur.empty()) v.copies.push_back(cur);
    return v;
}

std::vector<Milestone> reference_algorithm_milestones(int k, int max_milestones) {
    std::vector<Milestone> out;
    if (max_milestones <= 0) return out;
    std::string word = "11";
    const std::string::value_type top = static_cast<char>('0' + k);
    while (static_cast<int>(out.size()) < max_milestones) {
        int half = static_cast<int>(word.size()) / 2;
        bool next_word_taken = false;
        // A word that satisfies (*) passes through once more with all
        // patterns removed before the length grows, hence half + 1 entries.
        for (int t = 1; t <= half + 1; ++t) {
            out.push_back(Milestone{0, static_cast<int64_t>(word.size()), word,
                                    std::max<int64_t>(t - 2, 0), t - 1});
            if (static_cast<int>(out.size()) >= max_milestones) return out;
            if (t > half) break;
            std::string bt = block_at(word, t);
            bool match = false;
            for (int j = t + 1; j <= half; ++j) {
                if (is_subword(bt, block_at(word, j))) { match = true; break; }
            }
            if (match) {
                if (word == std::string(word.size(), top)) return out;  // s++ overflows: HALT
                word = next_word(std::move(word), k);
                next_word_taken = true;
                break;
            }
        }
        if (!next_word_taken) word.assign(word.size() + 2, '1');  // (*) satisfied: N += 2
    }
    return out;
}

std::vector<Milestone> machine_milestones(const Machine& mach, int max_milestones,
                                          uint64_t step_limit) {
    std::vector<Milestone> out;
    auto q11 = mach.try_state_index("q1-1");
    if (!q11) return out;

    Simulator sim(mach);
    int32_t prev = -1;
    while (sim.config().steps < step_limit && static_cast<int>(out.size()) < max_milestones) {
        if (sim.config().state == *q11 && prev != *q11) {
            SegmentView v = decode_segments(mach, sim.config());
            if (v.wellformed && v.i == 0) {
                out.push_back(Milestone{sim.config().steps, static_cast<int64_t>(v.word.size()),
                                        v.word, v.l, v.lmax});
            }
        }
        prev = sim.config().state;
        if (sim.step_once() != StepStatus::Ok) break;
    }
    return out;
}

}  // namespace tmlab
