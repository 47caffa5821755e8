#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tmlab {

// Words over {1..k} are held as strings of digit characters '1'..'9' with the
// least significant letter (for enumeration order) at the right end. k <= 9.
struct Word {
    int k = 1;
    std::string letters;
};

bool valid_word(const Word& w);

// True iff a embeds into b as a (not necessarily contiguous) subsequence,
// decided by a greedy left-to-right scan.
bool is_subword(std::string_view a, std::string_view b);

// Blocks s^(i) = s_i..s_{2i} for i = 1..floor(N/2); block i has length i+1.
std::vector<std::string> blocks(std::string_view word);
std::string block_at(std::string_view word, int i);

struct StarVerdict {
    bool ok;
    int i = 0, j = 0;  // least violating pair when !ok

    bool operator==(const StarVerdict& o) const { return ok == o.ok && i == o.i && j == o.j; }
};

// Friedman's property (*): no pair i < j with s^(i) a subword of s^(j).
// Reports the lexicographically least violating pair.
StarVerdict satisfies_star(std::string_view word);

// Base-k increment, least significant letter at the right end; all-k of
// length N increments to all-1 of length N+1.
std::string next_word(std::string word, int k);

struct NkResult {
    bool exact;      // exact value found (some length had no satisfying word)
    int value;       // n(k) when exact, otherwise the lower bound max_len
    std::string witness;  // one maximal satisfying word seen
};

// Scans lengths 1..max_len exhaustively in next_word order. Stops at the
// first length with no satisfying word; extension-closure makes that length
// definitive. Cost is O(k^(max_len+1)) in the worst case.
NkResult n_of_k(int k, int max_len, int jobs = 1);

}  // namespace tmlab
