#include "tmlab/reduce.hpp"

#include <json.hpp>

namespace tmlab {

namespace {

int64_t floordiv(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::string kind_name(DecoderCertificate::Kind k) {
    switch (k) {
        case DecoderCertificate::Kind::SymbolBlocks: return "symbol-blocks";
        case DecoderCertificate::Kind::TupleField: return "tuple-field";
        case DecoderCertificate::Kind::SeededTwoState: return "seeded-two-state";
    }
    return "?";
}

DecoderCertificate::Kind kind_of(const std::string& s) {
    if (s == "symbol-blocks") return DecoderCertificate::Kind::SymbolBlocks;
    if (s == "tuple-field") return DecoderCertificate::Kind::TupleField;
    if (s == "seeded-two-state") return DecoderCertificate::Kind::SeededTwoState;
    throw std::runtime_error("unknown certificate kind: " + s);
}

}  // namespace

std::string DecoderCertificate::to_json() const {
    nlohmann::json j;
    j["format_version"] = 1;
    j["kind"] = kind_name(kind);
    j["original_blank"] = original_blank;
    if (kind == Kind::SymbolBlocks) {
        j["base"] = base;
        j["block_len"] = block_len;
        j["tuple_map"] = tuple_map;
    } else {
        j["symbol_map"] = symbol_map;
        j["mirrored"] = mirrored;
        j["mirror_origin"] = mirror_origin;
        if (needs_seed) {
            j["seed_pos"] = seed_pos;
            j["seed_symbol"] = seed_symbol;
        }
        if (overflow_counter >= 0) j["overflow_counter"] = overflow_counter;
    }
    return j.dump(2);
}

DecoderCertificate DecoderCertificate::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format_version", 0) != 1)
        throw std::runtime_error("unsupported certificate format version");
    DecoderCertificate c;
    c.kind = kind_of(j.at("kind").get<std::string>());
    c.original_blank = j.at("original_blank").get<std::string>();
    if (c.kind == Kind::SymbolBlocks) {
        c.base = j.at("base").get<int>();
        c.block_len = j.at("block_len").get<int>();
        c.tuple_map = j.at("tuple_map").get<std::map<std::string, std::string>>();
    } else {
        c.symbol_map = j.at("symbol_map").get<std::map<std::string, std::string>>();
        c.mirrored = j.value("mirrored", false);
        c.mirror_origin = j.value("mirror_origin", int64_t{0});
        if (j.contains("seed_pos")) {
            c.needs_seed = true;
            c.seed_pos = j.at("seed_pos").get<int64_t>();
            c.seed_symbol = j.at("seed_symbol").get<std::string>();
        }
        c.overflow_counter = j.value("overflow_counter", int64_t{-1});
    }
    return c;
}

std::map<int64_t, std::string> decode_tape(const DecoderCertificate& cert, const Machine& reduced,
                                           const Configuration& config) {
    std::map<int64_t, std::string> out;
    auto [lo, hi] = config.tape.support();
    if (lo > hi) return out;

    if (cert.kind == DecoderCertificate::Kind::SymbolBlocks) {
        int64_t first = floordiv(lo, cert.block_len);
        int64_t last = floordiv(hi, cert.block_len);
        for (int64_t blk = first; blk <= last; ++blk) {
            std::string key;
            for (int j = 0; j < cert.block_len; ++j) {
                int32_t c = config.tape.get(blk * cert.block_len + j);
                key += reduced.symbol_name(c);
            }
            auto it = cert.tuple_map.find(key);
            if (it == cert.tuple_map.end())
                throw std::runtime_error("decode_tape: digit block '" + key +
                                         "' is not a symbol encoding");
            if (it->second != cert.original_blank) out[blk] = it->second;
        }
        return out;
    }

    for (int64_t pos = lo; pos <= hi; ++pos) {
        int32_t c = config.tape.get(pos);
        if (c == reduced.blank()) continue;
        const std::string& name = reduced.symbol_name(c);
        auto it = cert.symbol_map.find(name);
        if (it == cert.symbol_map.end())
            throw std::runtime_error("decode_tape: symbol '" + name + "' missing from certificate");
        if (it->second == cert.original_blank) continue;
        int64_t p = cert.mirrored ? 2 * cert.mirror_origin - pos : pos;
        out[p] = it->second;
    }
    return out;
}

Configuration reduced_initial_configuration(const ReducedMachine& rm) {
    Configuration cfg(rm.machine);
    if (rm.certificate.needs_seed) {
        cfg.tape.set(rm.certificate.seed_pos,
                     rm.machine.symbol_index(rm.certificate.seed_symbol));
    }
    return cfg;
}

}  // namespace tmlab
