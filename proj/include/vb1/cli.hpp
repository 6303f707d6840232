#ifndef VB1_CLI_HPP
#define VB1_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vb1/field.hpp"
#include "vb1/lattice.hpp"

namespace vb1 {

// Field descriptor syntax: "Q", "F2", "GF(2^3)".
FieldDescriptor parse_field(const std::string& text);

// Comma-separated identifiers; the count fixes the rank.
std::vector<std::string> parse_variables(const std::string& text, const Limits& lim = {});

// Subgroup descriptor: "m:<int>" (congruence), "prop53:<p>,<r>" (the rank-2
// kernel lattice), or generator vectors "a,b;c,d" where each ';'-separated
// group is one generating vector (a column of the basis matrix).
Lattice parse_subgroup(const std::string& text, int rank, const Limits& lim = {});

// Exit codes: 0 success, 2 bad input, 3 resource cap, 4 cross-check
// disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vb1

#endif
