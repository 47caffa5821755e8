#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "tmlab/ackermann.hpp"
#include "tmlab/bb.hpp"
#include "tmlab/friedman.hpp"
#include "tmlab/frontier.hpp"
#include "tmlab/machine_io.hpp"
#include "tmlab/reduce.hpp"
#include "tmlab/verify.hpp"
#include "tmlab/words.hpp"

namespace {

constexpr int kMachineFormatVersion = 1;
constexpr int kCertificateFormatVersion = 1;

using namespace tmlab;

struct CommandError : std::runtime_error {
    int code;
    CommandError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw CommandError(1, "cannot write " + path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CommandError(1, "cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

Machine load_or_fail(const std::string& path) {
    try {
        return parse_machine(read_file(path));
    } catch (const ParseError& e) {
        throw CommandError(1, path + ": " + e.what());
    }
}

int cmd_gen(int k, int delta, const std::string& out) {
    Machine m = generate_friedman({k, delta});
    std::string text = serialize_machine(m);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    std::cerr << "generated " << m.n() << " states, " << m.m() << " symbols\n";
    return 0;
}

int cmd_run(const std::string& path, uint64_t limit, const std::string& trace_path,
            uint64_t snapshot_every, const std::string& format) {
    Machine m = load_or_fail(path);
    std::ofstream trace;
    RunHooks hooks;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) throw CommandError(1, "cannot write " + trace_path);
        trace << "step\tstate\tpos\tread\twrite\tdir\n";
        hooks.on_step = [&](uint64_t s, int32_t q, int64_t pos, int32_t rd, int32_t wr, Dir d) {
            trace << s << '\t' << m.state_name(q) << '\t' << pos << '\t' << m.symbol_name(rd)
                  << '\t' << m.symbol_name(wr) << '\t' << dir_char(d) << '\n';
        };
    }
    if (snapshot_every > 0) {
        hooks.snapshot_every = snapshot_every;
        hooks.on_snapshot = [&](uint64_t s, int32_t q, int64_t pos, int64_t lo, int64_t hi) {
            std::cout << s << '\t' << m.state_name(q) << '\t' << pos << '\t' << lo << '\t' << hi
                      << '\n';
        };
    }
    RunResult r = run(m, limit, hooks);
    auto support = r.final.tape.nonblank();
    if (format == "json") {
        nlohmann::json j;
        j["outcome"] = r.outcome == Outcome::Halted ? "halted"
                      : r.outcome == Outcome::BudgetExhausted ? "budget-exhausted"
                                                              : "undefined-transition";
        j["steps"] = r.steps;
        nlohmann::json cells = nlohmann::json::object();
        for (auto [pos, sym] : support) cells[std::to_string(pos)] = m.symbol_name(sym);
        j["tape"] = cells;
        std::cout << j.dump(2) << "\n";
    } else {
        const char* what = r.outcome == Outcome::Halted ? "halted"
                          : r.outcome == Outcome::BudgetExhausted ? "budget exhausted"
                                                                  : "undefined transition";
        std::cout << what << " after " << r.steps << " steps\n";
        if (!support.empty()) {
            std::cout << "tape:";
            for (auto [pos, sym] : support) std::cout << " " << pos << ":" << m.symbol_name(sym);
            std::cout << "\n";
        }
    }
    if (r.outcome == Outcome::UndefinedTransition) {
        std::cerr << "undefined transition at (" << m.state_name(r.undefined_state) << ", "
                  << m.symbol_name(r.undefined_symbol) << ")\n";
        return 2;
    }
    return 0;
}

int cmd_snapshot(const std::string& path, uint64_t every, uint64_t limit, bool decode) {
    Machine m = load_or_fail(path);
    Simulator sim(m);
    if (decode) {
        std::cout << "step\tN\ti\tl\tlmax\tword\twellformed\n";
        while (sim.config().steps < limit) {
            uint64_t next_stop = std::min(limit, sim.config().steps + every);
            RunResult r = sim.run(next_stop);
            SegmentView v = decode_segments(m, sim.config());
            std::cout << sim.config().steps << '\t' << v.word.size() << '\t' << v.i << '\t' << v.l
                      << '\t' << v.lmax << '\t' << v.word << '\t' << (v.wellformed ? 1 : 0)
                      << '\n';
            if (r.outcome != Outcome::BudgetExhausted) {
                if (r.outcome == Outcome::UndefinedTransition) return 2;
                break;
            }
        }
        return 0;
    }
    std::cout << "step\tstate\tpos\tsupport_lo\tsupport_hi\n";
    RunHooks hooks;
    hooks.snapshot_every = every;
    hooks.on_snapshot = [&](uint64_t s, int32_t q, int64_t pos, int64_t lo, int64_t hi) {
        std::cout << s << '\t' << m.state_name(q) << '\t' << pos << '\t' << lo << '\t' << hi
                  << '\n';
    };
    RunResult r = sim.run(limit, hooks);
    return r.outcome == Outcome::UndefinedTransition ? 2 : 0;
}

int cmd_reduce(const std::string& pass, int base, const std::string& in, const std::string& out,
               const std::string& cert_path) {
    Machine m = load_or_fail(in);
    ReducedMachine rm = [&] {
        if (pass == "symbols") return reduce_symbols(m, base);
        if (pass == "states3") return reduce_states_3(m);
        if (pass == "states2b1") return reduce_states_2b1(m, base);
        if (pass == "states2-seeded") return reduce_states_2_seeded(m);
        if (pass == "states2-empty") return reduce_states_2_empty(m);
        throw CommandError(1, "unknown pass: " + pass);
    }();
    write_file(out, serialize_machine(rm.machine));
    if (!cert_path.empty()) write_file(cert_path, rm.certificate.to_json());
    std::cerr << "reduced to " << rm.machine.n() << " states, " << rm.machine.m()
              << " symbols (claimed bounds: " << rm.claimed.states << " states, "
              << rm.claimed.symbols << " symbols)\n";
    return 0;
}

int cmd_verify(const std::string& orig_path, const std::string& red_path,
               const std::string& cert_path, uint64_t budget) {
    Machine orig = load_or_fail(orig_path);
    Machine red = load_or_fail(red_path);
    DecoderCertificate cert;
    try {
        cert = DecoderCertificate::from_json(read_file(cert_path));
    } catch (const std::exception& e) {
        throw CommandError(1, cert_path + ": " + e.what());
    }
    ReducedMachine rm{std::move(red), std::move(cert), {0, 0}};
    Verdict v = verify_simulation(orig, rm, budget);
    switch (v.status) {
        case VerifyStatus::Equivalent:
            std::cout << "equivalent\n";
            return 0;
        case VerifyStatus::BudgetExhausted:
            std::cout << "budget exhausted\n";
            return 2;
        case VerifyStatus::Diverged:
            std::cout << "diverged: " << v.detail << "\n";
            return 2;
    }
    return 3;
}

int cmd_nk(int k, int max_len, bool witness, int jobs, const std::string& format) {
    NkResult r = n_of_k(k, max_len, jobs);
    if (format == "json") {
        nlohmann::json j;
        j["k"] = k;
        j["exact"] = r.exact;
        j[r.exact ? "value" : "lower_bound"] = r.value;
        if (witness) j["witness"] = r.witness;
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.exact)
            std::cout << "n(" << k << ") = " << r.value << "\n";
        else
            std::cout << "n(" << k << ") >= " << r.value << "\n";
        if (witness && !r.witness.empty()) std::cout << "witness: " << r.witness << "\n";
    }
    return 0;
}

int cmd_bb(int n, int m, uint64_t cutoff, int jobs, const std::string& format) {
    BBResult r;
    try {
        r = bb_enumerate(n, m, cutoff, jobs);
    } catch (const std::invalid_argument& e) {
        throw CommandError(2, e.what());
    }
    if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["m"] = m;
        j["cutoff"] = cutoff;
        j["champion_steps"] = r.champion_steps;
        j["halting"] = r.halting;
        j["cutoff_exceeded"] = r.cutoff_exceeded;
        j["total"] = r.total_machines;
        if (r.champion) j["champion"] = serialize_machine(*r.champion);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "class (" << n << "," << m << "): " << r.total_machines << " machines, "
                  << r.halting << " halting within " << cutoff << ", " << r.cutoff_exceeded
                  << " over cutoff\n";
        std::cout << "champion: " << r.champion_steps << " steps\n";
        if (r.champion) std::cout << serialize_machine(*r.champion);
    }
    return 0;
}

int cmd_ack(int64_t f, int64_t c, uint64_t bits, const std::string& format) {
    AckValue v = ackermann(f, c, bits);
    if (format == "json") {
        nlohmann::json j;
        j["f"] = f;
        j["c"] = c;
        j["bit_budget"] = bits;
        j["exact"] = v.exact;
        if (v.exact)
            j["value"] = v.value.str();
        else {
            j["overflow_f"] = v.overflow_f;
            j["overflow_c_bits"] = static_cast<uint64_t>(boost::multiprecision::msb(
                                       v.overflow_c == 0 ? BigInt(1) : v.overflow_c) + 1);
        }
        std::cout << j.dump(2) << "\n";
    } else if (v.exact) {
        std::cout << "A(" << f << "," << c << ") = " << v.value.str() << "\n";
    } else {
        std::cout << "A(" << f << "," << c << ") overflows " << bits
                  << " bits at recursion point A(" << v.overflow_f << ", c with "
                  << boost::multiprecision::msb(v.overflow_c == 0 ? BigInt(1) : v.overflow_c) + 1
                  << "-bit counter)\n";
    }
    return 0;
}

int cmd_frontier(const std::string& preset, const std::string& impls,
                 const std::string& format) {
    Frontier f;
    long long published = -1;
    if (!preset.empty()) {
        f = frontier_preset(preset);
        published = frontier_published_total(preset);
    } else {
        std::istringstream in(impls);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto x = item.find('x');
            if (x == std::string::npos) throw CommandError(1, "bad implementation spec: " + item);
            f.impls.push_back({std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
        }
    }
    FrontierReport r;
    try {
        r = frontier_count(f);
    } catch (const std::invalid_argument& e) {
        throw CommandError(1, e.what());
    }
    if (format == "json") {
        nlohmann::json j;
        j["total"] = r.total;
        if (published >= 0) {
            j["published_total"] = published;
            j["delta"] = r.total - published;
        }
        j["bands"] = nlohmann::json::array();
        for (const auto& b : r.bands)
            j["bands"].push_back({{"n_lo", b.n_lo}, {"n_hi", b.n_hi}, {"m_hi", b.m_hi},
                                  {"count", b.count}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n\tm\tcount\n";
        for (const auto& b : r.bands)
            std::cout << b.n_lo << ".." << b.n_hi << "\t2.." << b.m_hi << "\t" << b.count << "\n";
        std::cout << "total: " << r.total << "\n";
        if (published >= 0)
            std::cout << "published total: " << published << " (delta " << r.total - published
                      << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turing machine laboratory: word-search machine family, size-reduction passes, "
                 "and exhaustive verification tools"};
    app.require_subcommand(1);
    app.set_version_flag("--version",
                         std::string("machine format v") + std::to_string(kMachineFormatVersion) +
                             ", certificate format v" + std::to_string(kCertificateFormatVersion));

    std::string format = "text";

    auto* gen = app.add_subcommand("gen", "emit a word-search machine");
    int gen_k = 3, gen_delta = 0;
    std::string gen_out;
    gen->add_option("--k", gen_k, "alphabet size (>= 2)")->required();
    gen->add_option("--delta", gen_delta, "0: with marker X, 1: double-scan variant")
        ->check(CLI::Range(0, 1));
    gen->add_option("-o,--output", gen_out, "output machine file (stdout if omitted)");

    auto* runc = app.add_subcommand("run", "run a machine from the empty tape");
    std::string run_path, run_trace;
    uint64_t run_limit = 1'000'000, run_snap = 0;
    runc->add_option("machine", run_path, "machine file")->required();
    runc->add_option("--limit", run_limit, "step budget");
    runc->add_option("--trace", run_trace, "write a step trace TSV to this file");
    runc->add_option("--snapshot-every", run_snap, "print support snapshots every S steps");
    runc->add_option("--format", format, "text|json");

    auto* snap = app.add_subcommand("snapshot", "periodic snapshots of a running machine");
    std::string snap_path;
    uint64_t snap_every = 1000, snap_limit = 1'000'000;
    bool snap_decode = false;
    snap->add_option("--machine", snap_path, "machine file")->required();
    snap->add_option("--every", snap_every, "snapshot period in steps")->required();
    snap->add_option("--limit", snap_limit, "step budget");
    snap->add_flag("--decode-segments", snap_decode,
                   "decode the I/II/III tape layout of generated machines");

    auto* red = app.add_subcommand("reduce", "apply a size-reduction pass");
    std::string red_pass, red_in, red_out, red_cert;
    int red_base = 2;
    red->add_option("--pass", red_pass, "symbols|states3|states2b1|states2-seeded|states2-empty")
        ->required();
    red->add_option("--base", red_base, "digit base for symbols/states2b1");
    red->add_option("input", red_in, "input machine file")->required();
    red->add_option("-o,--output", red_out, "output machine file")->required();
    red->add_option("--emit-cert", red_cert, "write the decoding certificate JSON here");

    auto* ver = app.add_subcommand("verify", "co-simulate a machine against its reduction");
    std::string ver_orig, ver_red, ver_cert;
    uint64_t ver_budget = 1'000'000;
    ver->add_option("original", ver_orig)->required();
    ver->add_option("reduced", ver_red)->required();
    ver->add_option("--cert", ver_cert, "decoding certificate JSON")->required();
    ver->add_option("--budget", ver_budget, "step budget for both runs");

    auto* nk = app.add_subcommand("nk", "longest word lengths for the block-subsequence property");
    int nk_k = 2, nk_max = 14, nk_jobs = 1;
    bool nk_witness = false;
    nk->add_option("--k", nk_k, "alphabet size")->required();
    nk->add_option("--max-len", nk_max, "largest length to scan")->required();
    nk->add_flag("--witness", nk_witness, "print one maximal satisfying word");
    nk->add_option("--jobs", nk_jobs, "worker threads");
    nk->add_option("--format", format, "text|json");

    auto* bb = app.add_subcommand("bb", "exhaustive busy beaver enumeration");
    int bb_n = 2, bb_m = 2, bb_jobs = 1;
    uint64_t bb_cutoff = 1000;
    bb->add_option("--states", bb_n)->required();
    bb->add_option("--symbols", bb_m)->required();
    bb->add_option("--cutoff", bb_cutoff, "step cutoff per machine");
    bb->add_option("--jobs", bb_jobs, "worker threads");
    bb->add_option("--format", format, "text|json");

    auto* ack = app.add_subcommand("ack", "bounded exact Ackermann evaluation");
    int64_t ack_f = 1, ack_c = 1;
    uint64_t ack_bits = 1'000'000;
    ack->add_option("--f", ack_f)->required();
    ack->add_option("--c", ack_c)->required();
    ack->add_option("--bit-budget", ack_bits, "cap on any intermediate value, in bits");
    ack->add_option("--format", format, "text|json");

    auto* fr = app.add_subcommand("frontier", "count contests not dominated by implementations");
    std::string fr_preset, fr_impls;
    fr->add_option("--preset", fr_preset, "n3|n4");
    fr->add_option("--impl", fr_impls, "comma list like 2x1840,3x1080,...");
    fr->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_k, gen_delta, gen_out);
        if (runc->parsed()) return cmd_run(run_path, run_limit, run_trace, run_snap, format);
        if (snap->parsed()) return cmd_snapshot(snap_path, snap_every, snap_limit, snap_decode);
        if (red->parsed()) return cmd_reduce(red_pass, red_base, red_in, red_out, red_cert);
        if (ver->parsed()) return cmd_verify(ver_orig, ver_red, ver_cert, ver_budget);
        if (nk->parsed()) return cmd_nk(nk_k, nk_max, nk_witness, nk_jobs, format);
        if (bb->parsed()) return cmd_bb(bb_n, bb_m, bb_cutoff, bb_jobs, format);
        if (ack->parsed()) return cmd_ack(ack_f, ack_c, ack_bits, format);
        if (fr->parsed()) {
            if (fr_preset.empty() == fr_impls.empty())
                throw CommandError(1, "frontier needs exactly one of --preset or --impl");
            return cmd_frontier(fr_preset, fr_impls, format);
        }
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
