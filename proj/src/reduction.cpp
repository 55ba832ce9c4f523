#include "tchordal/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace tchordal {

namespace {

void validate_cnf(const CnfFormula& phi) {
    if (phi.variable_count < 1)
        throw InvalidParameterError("formula needs at least one variable");
    if (phi.clauses.empty())
        throw InvalidParameterError("formula needs at least one clause");
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        if (phi.clauses[i].empty())
            throw InvalidParameterError("clause " + std::to_string(i + 1) + " is empty");
        for (int lit : phi.clauses[i]) {
            const int var = std::abs(lit);
            if (lit == 0 || var > phi.variable_count)
                throw InvalidParameterError("clause " + std::to_string(i + 1) +
                                            " references variable " + std::to_string(var) +
                                            " outside 1.." + std::to_string(phi.variable_count));
        }
    }
}

}  // namespace

CnfFormula make_cnf(int variable_count, std::vector<std::vector<int>> clauses,
                    bool allow_large_clauses) {
    CnfFormula phi{variable_count, std::move(clauses)};
    validate_cnf(phi);
    if (!allow_large_clauses)
        for (std::size_t i = 0; i < phi.clauses.size(); ++i)
            if (phi.clauses[i].size() > 3)
                throw ClauseTooLargeError("clause " + std::to_string(i + 1) + " has " +
                                          std::to_string(phi.clauses[i].size()) +
                                          " literals (max 3)");
    return phi;
}

CnfFormula parse_dimacs_cnf(const std::string& text, bool allow_large_clauses) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int var_count = -1;
    long long clause_count = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first)) continue;
        if (first[0] == 'c') continue;
        if (first == "p") {
            if (var_count != -1) throw ParseError("duplicate header", lineno);
            std::string format;
            long long n = 0, m = 0;
            if (!(tokens >> format >> n >> m) || format != "cnf")
                throw ParseError("expected 'p cnf <vars> <clauses>'", lineno);
            std::string extra;
            if (tokens >> extra) throw ParseError("trailing tokens after header", lineno);
            if (n < 1) throw ParseError("variable count must be at least 1", lineno);
            if (m < 1) throw ParseError("clause count must be at least 1", lineno);
            var_count = static_cast<int>(n);
            clause_count = m;
            continue;
        }
        if (var_count == -1) throw ParseError("clause data before 'p cnf' header", lineno);
        std::istringstream literals(line);
        std::string token;
        while (literals >> token) {
            int lit = 0;
            try {
                std::size_t pos = 0;
                lit = std::stoi(token, &pos);
                if (pos != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ParseError("bad literal token '" + token + "'", lineno);
            }
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause", lineno);
                if (!allow_large_clauses && current.size() > 3)
                    throw ClauseTooLargeError("line " + std::to_string(lineno) + ": clause " +
                                              std::to_string(clauses.size() + 1) + " has " +
                                              std::to_string(current.size()) + " literals (max 3)");
                if (static_cast<long long>(clauses.size()) >= clause_count)
                    throw ParseError("more clauses than the header declares", lineno);
                clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > var_count)
                    throw ParseError("variable " + std::to_string(std::abs(lit)) +
                                         " out of range (header declares " +
                                         std::to_string(var_count) + ")",
                                     lineno);
                current.push_back(lit);
            }
        }
    }
    const int at = std::max(lineno, 1);
    if (var_count == -1) throw ParseError("missing 'p cnf' header", at);
    if (!current.empty()) throw ParseError("unterminated clause at end of input", at);
    if (static_cast<long long>(clauses.size()) != clause_count)
        throw ParseError("header declares " + std::to_string(clause_count) + " clauses, found " +
                             std::to_string(clauses.size()),
                         at);
    return CnfFormula{var_count, std::move(clauses)};
}

bool satisfies(const CnfFormula& phi, const Assignment& assignment) {
    for (const auto& clause : phi.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const int var = std::abs(lit);
            if (assignment.at(var) == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& phi) {
    validate_cnf(phi);
    const int n = phi.variable_count;
    if (n > 25)
        throw TooManyVariablesError("brute force is limited to 25 variables, formula has " +
                                    std::to_string(n));
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Assignment a(n + 1, false);
        for (int i = 1; i <= n; ++i) a[i] = ((mask >> (n - i)) & 1u) != 0;
        if (satisfies(phi, a)) return a;
    }
    return std::nullopt;
}

ReductionArtifact build_reduction(const CnfFormula& phi, int t, NegatedChordStyle style) {
    if (t < 3)
        throw InvalidParameterError(
            "t must be at least 3: with t = 2 the chord endpoints of a gadget path coincide "
            "and the chords form a digon");
    validate_cnf(phi);

    const int n = phi.variable_count;
    const int m = static_cast<int>(phi.clauses.size());
    GadgetMap map;
    std::vector<Arc> arcs;
    int next = 0;

    map.variables.reserve(n);
    for (int i = 0; i < n; ++i) {
        VariableGadget vg;
        vg.v1 = next + 1;
        vg.v2 = next + 2 * t;
        vg.p1.push_back(vg.v1);
        for (int j = 0; j < t - 1; ++j) vg.p1.push_back(next + 2 + j);
        vg.p1.push_back(vg.v2);
        vg.p2.push_back(vg.v1);
        for (int j = 0; j < t - 1; ++j) vg.p2.push_back(next + t + 1 + j);
        vg.p2.push_back(vg.v2);
        for (std::size_t j = 0; j + 1 < vg.p1.size(); ++j) arcs.push_back({vg.p1[j], vg.p1[j + 1]});
        for (std::size_t j = 0; j + 1 < vg.p2.size(); ++j) arcs.push_back({vg.p2[j], vg.p2[j + 1]});
        next += 2 * t;
        map.variables.push_back(std::move(vg));
    }

    map.clauses.reserve(m);
    for (int i = 0; i < m; ++i) {
        const int size = static_cast<int>(phi.clauses[i].size());
        ClauseGadget cg;
        cg.u1 = next + 1;
        for (int p = 0; p < size; ++p) cg.w.push_back(next + 2 + p);
        cg.u2 = next + 2 + size;
        for (Vertex w : cg.w) {
            arcs.push_back({cg.u1, w});
            arcs.push_back({w, cg.u2});
        }
        next += 2 + size;
        map.clauses.push_back(std::move(cg));
    }

    // the gadget ring
    for (int i = 0; i + 1 < n; ++i)
        arcs.push_back({map.variables[i].v2, map.variables[i + 1].v1});
    arcs.push_back({map.variables[n - 1].v2, map.clauses[0].u1});
    for (int i = 0; i + 1 < m; ++i)
        arcs.push_back({map.clauses[i].u2, map.clauses[i + 1].u1});
    arcs.push_back({map.clauses[m - 1].u2, map.variables[0].v1});

    // literal chords: a plain literal chords to the path meaning false (P2),
    // a negated literal to the path meaning true (P1)
    for (int i = 0; i < m; ++i)
        for (std::size_t p = 0; p < phi.clauses[i].size(); ++p) {
            const int lit = phi.clauses[i][p];
            const auto& vg = map.variables[std::abs(lit) - 1];
            const Vertex w = map.clauses[i].w[p];
            if (lit > 0) {
                arcs.push_back({w, vg.z(2)});
                arcs.push_back({vg.q(2), w});
            } else {
                arcs.push_back({w, vg.z(1)});
                arcs.push_back({style == NegatedChordStyle::corrected ? vg.q(1) : vg.q(2), w});
            }
        }

    ReductionArtifact art;
    art.digraph = Digraph(next, arcs);
    art.map = std::move(map);
    art.t = t;
    art.formula = phi;
    return art;
}

InducedCycleCertificate assignment_to_cycle(const ReductionArtifact& art,
                                            const Assignment& assignment) {
    const int n = art.formula.variable_count;
    if (static_cast<int>(assignment.size()) != n + 1)
        throw InvalidParameterError("assignment covers " +
                                    std::to_string(static_cast<int>(assignment.size()) - 1) +
                                    " of " + std::to_string(n) + " variables");
    if (!satisfies(art.formula, assignment))
        throw NotSatisfyingError("assignment does not satisfy the formula");

    std::vector<Vertex> vertices;
    for (int i = 0; i < n; ++i) {
        const auto& vg = art.map.variables[i];
        const auto& path = assignment[i + 1] ? vg.p1 : vg.p2;
        vertices.insert(vertices.end(), path.begin(), path.end());
    }
    for (std::size_t i = 0; i < art.formula.clauses.size(); ++i) {
        const auto& clause = art.formula.clauses[i];
        int chosen = -1;
        for (std::size_t p = 0; p < clause.size(); ++p) {
            const int lit = clause[p];
            if (assignment[std::abs(lit)] == (lit > 0)) {
                chosen = static_cast<int>(p);
                break;
            }
        }
        const auto& cg = art.map.clauses[i];
        vertices.push_back(cg.u1);
        vertices.push_back(cg.w[chosen]);
        vertices.push_back(cg.u2);
    }

    InducedCycleCertificate cert{std::move(vertices)};
    if (!cert.valid_in(art.digraph))
        throw Error("internal: assignment cycle failed certificate validation");
    return cert;
}

Assignment cycle_to_assignment(const ReductionArtifact& art, const InducedCycleCertificate& cycle) {
    if (!cycle.valid_in(art.digraph))
        throw InvalidParameterError(
            "certificate is not an induced directed cycle of the reduction digraph");
    if (cycle.length() == art.t)
        throw NotALongCycleError("cycle has length t = " + std::to_string(art.t));

    std::unordered_set<Vertex> on(cycle.vertices.begin(), cycle.vertices.end());
    for (const auto& vg : art.map.variables)
        if (!on.count(vg.v1) || !on.count(vg.v2))
            throw NotALongCycleError("cycle does not traverse every variable gadget");
    for (const auto& cg : art.map.clauses)
        if (!on.count(cg.u1) || !on.count(cg.u2))
            throw NotALongCycleError("cycle does not traverse every clause gadget");

    const int n = art.formula.variable_count;
    Assignment assignment(n + 1, false);
    for (int i = 0; i < n; ++i) {
        const auto& vg = art.map.variables[i];
        const bool takes_p1 = on.count(vg.z(1)) > 0;
        const bool takes_p2 = on.count(vg.z(2)) > 0;
        if (takes_p1 == takes_p2)
            throw NotALongCycleError("cycle does not choose one path in variable gadget " +
                                     std::to_string(i + 1));
        assignment[i + 1] = takes_p1;
    }
    if (!satisfies(art.formula, assignment))
        throw Error("internal: long cycle decoded to a non-satisfying assignment");
    return assignment;
}

ReductionVerdict verify_reduction(const CnfFormula& phi, int t, long long budget,
                                  NegatedChordStyle style) {
    const auto sat = sat_brute_force(phi);
    const auto art = build_reduction(phi, t, style);
    const auto chordality = is_t_chordal(art.digraph, t, budget);

    ReductionVerdict verdict;
    verdict.satisfiable = sat.has_value();
    verdict.chordal = chordality.chordal;
    verdict.equivalent = verdict.satisfiable != verdict.chordal;
    if (!verdict.equivalent) {
        verdict.detail = verdict.satisfiable
                             ? "satisfiable yet the digraph is t-chordal"
                             : "unsatisfiable yet the digraph has an induced cycle of length " +
                                   std::to_string(chordality.witness ? chordality.witness->length()
                                                                     : 0);
        return verdict;
    }

    if (!verdict.satisfiable) {
        verdict.detail = "unsatisfiable and t-chordal";
        return verdict;
    }

    const int n = phi.variable_count;
    const int m = static_cast<int>(phi.clauses.size());
    const int expected_length = n * (t + 1) + 3 * m;
    try {
        if (!chordality.witness || chordality.witness->length() != expected_length) {
            verdict.equivalent = false;
            verdict.detail = "witness cycle has length " +
                             std::to_string(chordality.witness ? chordality.witness->length() : 0) +
                             ", expected " + std::to_string(expected_length);
            return verdict;
        }
        cycle_to_assignment(art, *chordality.witness);

        const auto cert = assignment_to_cycle(art, *sat);
        if (cert.length() != expected_length) {
            verdict.equivalent = false;
            verdict.detail = "constructed cycle has length " + std::to_string(cert.length()) +
                             ", expected " + std::to_string(expected_length);
            return verdict;
        }
        const auto back = cycle_to_assignment(art, cert);
        if (back != *sat) {
            verdict.equivalent = false;
            verdict.detail = "assignment round-trip mismatch";
            return verdict;
        }
    } catch (const BudgetExceededError&) {
        throw;
    } catch (const Error& e) {
        verdict.equivalent = false;
        verdict.detail = std::string("round-trip failure: ") + e.what();
        return verdict;
    }
    verdict.detail = "satisfiable with certificate of length " + std::to_string(expected_length);
    return verdict;
}

}  // namespace tchordal
