#include "tmlab/machine.hpp"

namespace tmlab {

Machine::Machine(std::vector<std::string> states, std::vector<std::string> symbols,
                 const std::string& blank, const std::string& start)
    : states_(std::move(states)), symbols_(std::move(symbols)) {
    if (states_.empty() || symbols_.empty())
        throw MachineError("machine needs at least one state and one symbol");
    for (int32_t i = 0; i < static_cast<int32_t>(states_.size()); ++i) {
        if (!state_index_.emplace(states_[i], i).second)
            throw MachineError("duplicate state name: " + states_[i]);
    }
    for (int32_t i = 0; i < static_cast<int32_t>(symbols_.size()); ++i) {
        if (!sym_index_.emplace(symbols_[i], i).second)
            throw MachineError("duplicate symbol name: " + symbols_[i]);
    }
    blank_ = symbol_index(blank);
    start_ = state_index(start);
    table_.assign(states_.size() * symbols_.size(), std::nullopt);
}

int32_t Machine::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) throw MachineError("unknown state: " + name);
    return it->second;
}

int32_t Machine::symbol_index(const std::string& name) const {
    auto it = sym_index_.find(name);
    if (it == sym_index_.end()) throw MachineError("unknown symbol: " + name);
    return it->second;
}

std::optional<int32_t> Machine::try_state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int32_t> Machine::try_symbol_index(const std::string& name) const {
    auto it = sym_index_.find(name);
    if (it == sym_index_.end()) return std::nullopt;
    return it->second;
}

void Machine::set_action(int32_t q, int32_t e, Action a) {
    auto& slot = table_.at(static_cast<size_t>(q) * symbols_.size() + e);
    if (slot.has_value())
        throw MachineError("duplicate transition for (" + states_.at(q) + ", " + symbols_.at(e) + ")");
    if (a.next != kHalt && (a.next < 0 || a.next >= n()))
        throw MachineError("transition target state out of range");
    if (a.write < 0 || a.write >= m())
        throw MachineError("transition write symbol out of range");
    slot = a;
}

void Machine::set_action(const std::string& q, const std::string& e, const std::string& next,
                         const std::string& write, Dir dir) {
    int32_t nx = (next == "HALT") ? kHalt : state_index(next);
    set_action(state_index(q), symbol_index(e), Action{nx, symbol_index(write), dir});
}

size_t Machine::defined_entries() const {
    size_t c = 0;
    for (const auto& a : table_)
        if (a) ++c;
    return c;
}

void Machine::validate() const {
    if (states_.empty() || symbols_.empty())
        throw MachineError("machine needs at least one state and one symbol");
    if (blank_ < 0 || blank_ >= m()) throw MachineError("blank symbol out of range");
    if (start_ < 0 || start_ >= n()) throw MachineError("start state out of range");
    for (int32_t q = 0; q < n(); ++q) {
        for (int32_t e = 0; e < m(); ++e) {
            const auto& a = action(q, e);
            if (!a) continue;
            if (a->next != kHalt && (a->next < 0 || a->next >= n()))
                throw MachineError("action target out of range at (" + states_[q] + ", " + symbols_[e] + ")");
            if (a->write < 0 || a->write >= m())
                throw MachineError("action write out of range at (" + states_[q] + ", " + symbols_[e] + ")");
        }
    }
}

bool Machine::operator==(const Machine& o) const {
    return states_ == o.states_ && symbols_ == o.symbols_ && blank_ == o.blank_ &&
           start_ == o.start_ && table_ == o.table_;
}

}  // namespace tmlab
