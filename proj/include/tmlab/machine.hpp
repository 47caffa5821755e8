#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tmlab {

// Sentinel state index for the halting pseudo-state. A halting transition is
// a normal, counted transition whose next state is kHalt.
inline constexpr int32_t kHalt = -1;

enum class Dir : int8_t { L = -1, R = +1 };

inline char dir_char(Dir d) { return d == Dir::L ? 'L' : 'R'; }

struct Action {
    int32_t next;   // state index, or kHalt
    int32_t write;  // symbol index
    Dir dir;

    bool operator==(const Action& o) const {
        return next == o.next && write == o.write && dir == o.dir;
    }
};

struct MachineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A deterministic single-tape machine over named states and symbols.
// The table is indexed by (state, symbol); entries may be absent, which is a
// first-class "undefined" outcome when hit at run time, never a silent halt.
class Machine {
public:
    Machine() = default;
    Machine(std::vector<std::string> states, std::vector<std::string> symbols,
            const std::string& blank, const std::string& start);

    int n() const { return static_cast<int>(states_.size()); }
    int m() const { return static_cast<int>(symbols_.size()); }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    int32_t blank() const { return blank_; }
    int32_t start() const { return start_; }

    const std::string& state_name(int32_t q) const { return states_.at(q); }
    const std::string& symbol_name(int32_t e) const { return symbols_.at(e); }

    int32_t state_index(const std::string& name) const;
    int32_t symbol_index(const std::string& name) const;
    std::optional<int32_t> try_state_index(const std::string& name) const;
    std::optional<int32_t> try_symbol_index(const std::string& name) const;
    bool has_symbol(const std::string& name) const { return sym_index_.count(name) != 0; }

    const std::optional<Action>& action(int32_t q, int32_t e) const {
        return table_[static_cast<size_t>(q) * symbols_.size() + e];
    }
    void set_action(int32_t q, int32_t e, Action a);
    void set_action(const std::string& q, const std::string& e, const std::string& next,
                    const std::string& write, Dir dir);

    size_t defined_entries() const;

    // Checks the structural invariants: blank/start exist, every action's
    // write symbol and next state are in range.
    void validate() const;

    bool operator==(const Machine& o) const;

private:
    std::vector<std::string> states_;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, int32_t> state_index_;
    std::unordered_map<std::string, int32_t> sym_index_;
    int32_t blank_ = 0;
    int32_t start_ = 0;
    std::vector<std::optional<Action>> table_;
};

}  // namespace tmlab
