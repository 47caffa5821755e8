#include "tmlab/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tmlab {

bool valid_word(const Word& w) {
    if (w.k < 1 || w.k > 9) return false;
    for (char c : w.letters)
        if (c < '1' || c > '0' + w.k) return false;
    return true;
}

bool is_subword(std::string_view a, std::string_view b) {
    size_t i = 0;
    for (size_t j = 0; j < b.size() && i < a.size(); ++j)
        if (b[j] == a[i]) ++i;
    return i == a.size();
}

std::string block_at(std::string_view word, int i) {
    // s^(i) = s_i..s_{2i}, 1-indexed.
    return std::string(word.substr(static_cast<size_t>(i) - 1, static_cast<size_t>(i) + 1));
}

std::vector<std::string> blocks(std::string_view word) {
    std::vector<std::string> out;
    int half = static_cast<int>(word.size()) / 2;
    out.reserve(half);
    for (int i = 1; i <= half; ++i) out.push_back(block_at(word, i));
    return out;
}

StarVerdict satisfies_star(std::string_view word) {
    int half = static_cast<int>(word.size()) / 2;
    for (int i = 1; i <= half; ++i) {
        std::string bi = block_at(word, i);
        for (int j = i + 1; j <= half; ++j) {
            if (is_subword(bi, block_at(word, j))) return StarVerdict{false, i, j};
        }
    }
    return StarVerdict{true, 0, 0};
}

std::string next_word(std::string word, int k) {
    if (k < 1 || k > 9) throw std::invalid_argument("next_word: k out of range");
    char top = static_cast<char>('0' + k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < top) {
            ++*it;
            return word;
        }
        *it = '1';
    }
    return std::string(word.size() + 1, '1');
}

namespace {

// Scans all k^len words of a given length for a (*)-satisfying one; returns
// the first such word in next_word order, or empty.
std::string first_satisfier(int k, int len, int jobs) {
    uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<uint64_t>(k);

    auto word_at = [&](uint64_t idx) {
        std::string w(static_cast<size_t>(len), '1');
        for (int p = len - 1; p >= 0; --p) {
            w[static_cast<size_t>(p)] = static_cast<char>('1' + idx % k);
            idx /= static_cast<uint64_t>(k);
        }
        return w;
    };

    if (jobs <= 1 || total < 4096) {
        std::string w(static_cast<size_t>(len), '1');
        for (uint64_t i = 0; i < total; ++i) {
            if (satisfies_star(w).ok) return w;
            w = next_word(std::move(w), k);
        }
        return {};
    }

    // Deterministic partition: contiguous index ranges, merged by min index.
    uint64_t best = total;
    std::vector<std::thread> workers;
    std::vector<uint64_t> results(static_cast<size_t>(jobs), total);
    uint64_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            uint64_t lo = chunk * static_cast<uint64_t>(t);
            uint64_t hi = std::min(total, lo + chunk);
            if (lo >= hi) return;
            std::string w = word_at(lo);
            for (uint64_t i = lo; i < hi; ++i) {
                if (satisfies_star(w).ok) {
                    results[static_cast<size_t>(t)] = i;
                    return;
                }
                w = next_word(std::move(w), k);
            }
        });
    }
    for (auto& th : workers) th.join();
    for (uint64_t r : results) best = std::min(best, r);
    return best == total ? std::string{} : word_at(best);
}

}  // namespace

NkResult n_of_k(int k, int max_len, int jobs) {
    if (k < 1 || k > 9) throw std::invalid_argument("n_of_k: k must be in 1..9");
    if (max_len < 1) throw std::invalid_argument("n_of_k: max_len must be >= 1");

    std::string witness;
    for (int len = 1; len <= max_len; ++len) {
        std::string sat = first_satisfier(k, len, jobs);
        if (sat.empty()) return NkResult{true, len - 1, witness};
        witness = sat;
    }
    return NkResult{false, max_len, witness};
}

}  // namespace tmlab
