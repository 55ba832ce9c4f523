#pragma once

#include <iosfwd>
#include <string>

#include "tchordal/amplifier.hpp"
#include "tchordal/digraph.hpp"
#include "tchordal/reduction.hpp"

namespace tchordal {

// dgf text format: optional "c <comment>" lines, one "p dgf <n> <m>" line,
// then m lines "a <u> <v>". Writing then reading reproduces the digraph
// exactly.
Digraph read_dgf(std::istream& in);
Digraph read_dgf_string(const std::string& text);
void write_dgf(const Digraph& d, std::ostream& out);
std::string to_dgf(const Digraph& d);

// Sets file: one line "s <v1> <v2> ..." per independent set; "c" comments and
// blank lines are skipped. Independence is validated against the host.
IndependentSetFamily parse_sets_file(const std::string& text, const Digraph& host);

// Companion map for an amplifier output: "copy <c>: <vertices>" for each
// tracked copy, then "set <c> <j>: <vertices>" for each copy and family set.
void write_amplifier_map(const AmplifierOutput& out, std::ostream& os);

// Gadget map: "var <i> v1=<x> v2=<y> P1=<seq> P2=<seq>" per variable and
// "clause <i> u1=<x> u2=<y> w=<list>" per clause; sequences comma-separated.
void write_gadget_map(const ReductionArtifact& art, std::ostream& os);

}  // namespace tchordal
