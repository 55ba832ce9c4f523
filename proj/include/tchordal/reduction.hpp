#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tchordal/chordality.hpp"
#include "tchordal/digraph.hpp"

namespace tchordal {

// CNF formula; literals are signed variable indices (positive = plain,
// negative = negated).
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
};

// Validating factory. Clause size is capped at 3 unless allow_large_clauses.
CnfFormula make_cnf(int variable_count, std::vector<std::vector<int>> clauses,
                    bool allow_large_clauses = false);

// DIMACS CNF: "p cnf <vars> <clauses>" then 0-terminated clauses; comment
// lines start with 'c'.
CnfFormula parse_dimacs_cnf(const std::string& text, bool allow_large_clauses = false);

using Assignment = std::vector<bool>;  // 1-indexed; [0] unused

bool satisfies(const CnfFormula& phi, const Assignment& assignment);

// First satisfying assignment in binary order (false < true, x1 most
// significant), or nullopt. Limited to 25 variables.
std::optional<Assignment> sat_brute_force(const CnfFormula& phi);

// Chord wiring for a negated literal. `corrected` attaches both chords to the
// variable's first path (the one whose traversal means true), mirroring the
// plain-literal case; `skewed_q` instead takes the q-chord from the second
// path, which breaks the equivalence and exists only for regression testing.
enum class NegatedChordStyle { corrected, skewed_q };

struct VariableGadget {
    Vertex v1 = 0, v2 = 0;
    std::vector<Vertex> p1, p2;  // full sequences v1 ... v2, t+1 vertices each

    Vertex z(int j) const { return (j == 1 ? p1 : p2)[1]; }
    Vertex q(int j) const {
        const auto& p = (j == 1 ? p1 : p2);
        return p[p.size() - 2];
    }
};

struct ClauseGadget {
    Vertex u1 = 0, u2 = 0;
    std::vector<Vertex> w;  // one vertex per literal occurrence, clause order
};

struct GadgetMap {
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
};

struct ReductionArtifact {
    Digraph digraph;
    GadgetMap map;
    int t = 0;
    CnfFormula formula;
};

// Builds the ring of variable and clause gadgets whose induced directed
// cycles of length other than t correspond exactly to satisfying assignments.
// Requires t >= 3; for t = 2 the chord endpoints would coincide into a digon.
ReductionArtifact build_reduction(const CnfFormula& phi, int t,
                                  NegatedChordStyle style = NegatedChordStyle::corrected);

// The induced cycle traversing each variable's chosen path and one true
// literal per clause (lowest position among true ones). Length is
// n(t+1) + 3m. Throws NotSatisfyingError when the assignment fails a clause.
InducedCycleCertificate assignment_to_cycle(const ReductionArtifact& art,
                                            const Assignment& assignment);

// Reads the assignment off an induced cycle of length != t that traverses the
// whole gadget ring. Throws NotALongCycleError otherwise.
Assignment cycle_to_assignment(const ReductionArtifact& art, const InducedCycleCertificate& cycle);

struct ReductionVerdict {
    bool equivalent = false;
    bool satisfiable = false;
    bool chordal = false;
    std::string detail;
};

// Computes both sides independently: brute-force satisfiability and
// t-chordality of the built digraph. Equivalent iff satisfiable == not
// chordal; satisfiable instances additionally round-trip
// assignment_to_cycle / cycle_to_assignment and pin the certificate length.
ReductionVerdict verify_reduction(const CnfFormula& phi, int t, long long budget,
                                  NegatedChordStyle style = NegatedChordStyle::corrected);

}  // namespace tchordal
