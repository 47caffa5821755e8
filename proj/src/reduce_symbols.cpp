#include <stdexcept>

#include "tmlab/reduce.hpp"

namespace tmlab {

namespace {

int block_length(int base, int m) {
    int l = 1;
    long long cap = base;
    while (cap < m) {
        cap *= base;
        ++l;
    }
    return l;
}

}  // namespace

ReducedMachine reduce_symbols(const Machine& orig, int base) {
    if (base < 2) throw std::invalid_argument("reduce_symbols: base must be >= 2");
    orig.validate();
    const int n = orig.n();
    const int m = orig.m();
    const int l = block_length(base, m);

    // The blank must become the all-zero block, so symbol codes put it first.
    std::vector<int> code_of(m), sym_of(m, -1);
    {
        int next = 1;
        for (int e = 0; e < m; ++e) {
            code_of[e] = (e == orig.blank()) ? 0 : next++;
        }
        for (int e = 0; e < m; ++e) sym_of[code_of[e]] = e;
    }
    auto digits_of = [&](int code) {
        std::vector<int> d(static_cast<size_t>(l), 0);
        for (int j = l - 1; j >= 0; --j) {
            d[static_cast<size_t>(j)] = code % base;
            code /= base;
        }
        return d;  // most significant first; position j in the block holds d[j]
    };

    // A prefix value v at depth d is alive iff some code < m extends it.
    auto prefix_alive = [&](long long v, int depth) {
        long long scale = 1;
        for (int i = 0; i < l - depth; ++i) scale *= base;
        return v * scale <= m - 1;
    };

    std::vector<std::string> states;

    auto read_name = [&](int q, long long v, int depth) {
        if (depth == 0) return orig.state_name(q);
        return orig.state_name(q) + ".r" + std::to_string(v);
    };
    auto wl_name = [&](int q, int e, int j) {
        return orig.state_name(q) + ".w" + std::to_string(e) + "_" + std::to_string(j);
    };
    auto wr_name = [&](int q, int e, int j) {
        return orig.state_name(q) + ".x" + std::to_string(e) + "_" + std::to_string(j);
    };
    auto w0_name = [&](int q, int j) {
        return orig.state_name(q) + ".s" + std::to_string(j);
    };

    // Collect states: read trees for every original state, write/return walks
    // per defined transition, re-entry walks per left-moving target.
    std::vector<bool> needs_walk0(static_cast<size_t>(n), false);
    for (int q = 0; q < n; ++q)
        for (int e = 0; e < m; ++e) {
            const auto& a = orig.action(q, e);
            if (a && a->dir == Dir::L && a->next != kHalt) needs_walk0[a->next] = true;
        }

    for (int q = 0; q < n; ++q) {
        states.push_back(read_name(q, 0, 0));
        long long level = 1;
        for (int depth = 1; depth <= l - 1; ++depth) {
            level *= base;
            for (long long v = 0; v < level; ++v)
                if (prefix_alive(v, depth)) states.push_back(read_name(q, v, depth));
        }
        for (int e = 0; e < m; ++e) {
            const auto& a = orig.action(q, e);
            if (!a) continue;
            for (int j = 1; j <= l - 1; ++j) states.push_back(wl_name(q, e, j));
            if (a->dir == Dir::R && a->next != kHalt)
                for (int j = 1; j <= l - 1; ++j) states.push_back(wr_name(q, e, j));
        }
        if (needs_walk0[q])
            for (int j = 1; j <= l - 1; ++j) states.push_back(w0_name(q, j));
    }

    std::vector<std::string> symbols;
    for (int d = 0; d < base; ++d) symbols.push_back(std::to_string(d));

    Machine out(states, symbols, "0", read_name(orig.start(), 0, 0));

    auto entry_of = [&](int32_t q) { return read_name(q, 0, 0); };

    for (int q = 0; q < n; ++q) {
        // Read tree: depth 0..l-1, accumulating the prefix value.
        for (int depth = 0; depth <= l - 1; ++depth) {
            long long level = 1;
            for (int i = 0; i < depth; ++i) level *= base;
            for (long long v = 0; v < level; ++v) {
                if (!prefix_alive(v, depth)) continue;
                std::string from = read_name(q, v, depth);
                for (int g = 0; g < base; ++g) {
                    long long v2 = v * base + g;
                    if (depth < l - 1) {
                        if (!prefix_alive(v2, depth + 1)) continue;
                        out.set_action(from, std::to_string(g), read_name(q, v2, depth + 1),
                                       std::to_string(g), Dir::R);
                        continue;
                    }
                    // Full code read: apply the original action.
                    if (v2 >= m) continue;
                    int e = sym_of[static_cast<size_t>(v2)];
                    const auto& a = orig.action(q, e);
                    if (!a) continue;
                    auto nd = digits_of(code_of[a->write]);
                    if (l == 1) {
                        std::string nx = a->next == kHalt ? "HALT" : entry_of(a->next);
                        out.set_action(from, std::to_string(g), nx, std::to_string(nd[0]), a->dir);
                        continue;
                    }
                    // Write the last digit here, then walk left writing the rest.
                    out.set_action(from, std::to_string(g), wl_name(q, e, 1),
                                   std::to_string(nd[static_cast<size_t>(l - 1)]), Dir::L);
                }
            }
        }

        for (int e = 0; e < m; ++e) {
            const auto& a = orig.action(q, e);
            if (!a || l == 1) continue;
            auto nd = digits_of(code_of[a->write]);
            for (int j = 1; j <= l - 1; ++j) {
                // At block position l-1-j, writing digit nd[l-1-j].
                std::string w = std::to_string(nd[static_cast<size_t>(l - 1 - j)]);
                std::string from = wl_name(q, e, j);
                std::string nx;
                Dir dir;
                if (j < l - 1) {
                    nx = wl_name(q, e, j + 1);
                    dir = Dir::L;
                } else if (a->next == kHalt) {
                    nx = "HALT";
                    dir = a->dir;
                } else if (a->dir == Dir::R) {
                    nx = wr_name(q, e, 1);
                    dir = Dir::R;
                } else {
                    nx = w0_name(a->next, 1);
                    dir = Dir::L;
                }
                for (int g = 0; g < base; ++g) out.set_action(from, std::to_string(g), nx, w, dir);
            }
            if (a->dir == Dir::R && a->next != kHalt) {
                for (int j = 1; j <= l - 1; ++j) {
                    std::string nx = (j < l - 1) ? wr_name(q, e, j + 1) : entry_of(a->next);
                    for (int g = 0; g < base; ++g)
                        out.set_action(wr_name(q, e, j), std::to_string(g), nx, std::to_string(g),
                                       Dir::R);
                }
            }
        }

        if (needs_walk0[q] && l > 1) {
            for (int j = 1; j <= l - 1; ++j) {
                std::string nx = (j < l - 1) ? w0_name(q, j + 1) : entry_of(q);
                for (int g = 0; g < base; ++g)
                    out.set_action(w0_name(q, j), std::to_string(g), nx, std::to_string(g), Dir::L);
            }
        }
    }

    long long tree = 0;
    {
        long long lvl = 1;
        for (int d = 0; d < l; ++d) { tree += lvl; lvl *= base; }
    }
    ClaimedBounds claimed;
    claimed.symbols = base;
    claimed.states = static_cast<long long>(n) * ((l - 1) + tree + 2LL * m * (l - 1));
    long long coarse = 2LL * (m + 1) * n * l;
    if (out.n() > claimed.states || out.n() > coarse)
        throw InvariantViolation("reduce_symbols: state count exceeds the claimed bound");

    DecoderCertificate cert;
    cert.kind = DecoderCertificate::Kind::SymbolBlocks;
    cert.original_blank = orig.symbol_name(orig.blank());
    cert.base = base;
    cert.block_len = l;
    for (int e = 0; e < m; ++e) {
        auto d = digits_of(code_of[e]);
        std::string key;
        for (int x : d) key += static_cast<char>('0' + x);
        cert.tuple_map[key] = orig.symbol_name(e);
    }

    out.validate();
    return ReducedMachine{std::move(out), std::move(cert), claimed};
}

}  // namespace tmlab
