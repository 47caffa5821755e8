#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tmlab/machine.hpp"

namespace tmlab {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Machine file format (UTF-8, line based, '#' starts a comment):
//   blank: <sym>
//   start: <state>
//   symbols: <sym> ...
//   states: <state> ...
//   <state> <sym> -> <state|HALT> <sym> <L|R>
// Headers may appear in any order but must all precede the transitions.
Machine parse_machine(const std::string& text);
Machine load_machine(const std::string& path);

std::string serialize_machine(const Machine& mach);
void save_machine(const Machine& mach, const std::string& path);

}  // namespace tmlab
