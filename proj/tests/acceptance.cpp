// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "validators.hpp"

#include "tchordal/amplifier.hpp"
#include "tchordal/chordality.hpp"
#include "tchordal/dicoloring.hpp"
#include "tchordal/digraph.hpp"
#include "tchordal/io.hpp"
#include "tchordal/reduction.hpp"

using namespace tchordal;

namespace {

struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Suite {
    int passed = 0, failed = 0;

    void run(int number, const std::string& name, double time_limit_s,
             const std::function<void(Check&)>& body) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_limit_s > 0 && elapsed > time_limit_s)
            check.failures.push_back("runtime " + std::to_string(elapsed) + "s exceeds " +
                                     std::to_string(time_limit_s) + "s");
        if (check.failures.empty()) {
            ++passed;
            std::printf("criterion %d: PASS  %s  [%.2fs]\n", number, name.c_str(), elapsed);
        } else {
            ++failed;
            std::printf("criterion %d: FAIL  %s  [%.2fs]\n", number, name.c_str(), elapsed);
            for (const auto& f : check.failures) std::printf("    - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
};

Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({i, i + 1});
    arcs.push_back({n, 1});
    return Digraph(n, arcs);
}

Digraph without_arcs(const Digraph& d, const std::vector<Arc>& removed) {
    auto arcs = d.arcs();
    for (const auto& r : removed)
        arcs.erase(std::remove(arcs.begin(), arcs.end(), r), arcs.end());
    return Digraph(d.vertex_count(), arcs);
}

long long power(long long base, int exp) {
    long long v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

// Everything criteria 1-4 build, for the invariant re-checks of criterion 7.
struct Artifacts {
    std::vector<Digraph> hard_sequence;
    std::vector<std::pair<AmplifierOutput, IndependentSetFamily>> amplifier_runs;
    std::vector<ReductionArtifact> reductions;
    std::vector<std::pair<Digraph, InducedCycleCertificate>> cycle_certificates;
};

Artifacts artifacts;

// CNFs over n <= 2 variables, m <= 2 clauses of size <= 2: clauses are the
// nonempty sets of at most two distinct literals, formulas every list of one
// or two of them.
std::vector<CnfFormula> exhaustive_small_cnfs() {
    std::vector<CnfFormula> formulas;
    for (int n = 1; n <= 2; ++n) {
        std::vector<int> literals;
        for (int v = 1; v <= n; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        std::vector<std::vector<int>> clauses;
        for (std::size_t i = 0; i < literals.size(); ++i) {
            clauses.push_back({literals[i]});
            for (std::size_t j = i + 1; j < literals.size(); ++j)
                clauses.push_back({literals[i], literals[j]});
        }
        for (const auto& c : clauses) formulas.push_back(make_cnf(n, {c}));
        for (const auto& c1 : clauses)
            for (const auto& c2 : clauses) formulas.push_back(make_cnf(n, {c1, c2}));
    }
    return formulas;
}

void check_reduction_case(Check& check, const CnfFormula& phi, int t, long long budget,
                          const std::string& label) {
    const auto verdict = verify_reduction(phi, t, budget);
    check.require(verdict.equivalent, label + ": " + verdict.detail);
    auto art = build_reduction(phi, t);
    if (verdict.satisfiable) {
        const int n = phi.variable_count;
        const int m = static_cast<int>(phi.clauses.size());
        const auto assignment = sat_brute_force(phi);
        const auto cert = assignment_to_cycle(art, *assignment);
        check.require(cert.length() == n * (t + 1) + 3 * m,
                      label + ": certificate length " + std::to_string(cert.length()) +
                          " != n(t+1)+3m");
        check.require(cert.valid_in(art.digraph), label + ": certificate invalid");
        artifacts.cycle_certificates.push_back({art.digraph, cert});
    }
    artifacts.reductions.push_back(std::move(art));
}

void criterion1(Check& check) {
    for (int t : {3, 4, 5}) {
        const Digraph d = build_hard_sequence(t, 2, 100);
        const auto chordality = is_t_chordal(d, t);
        check.require(chordality.chordal, "t=" + std::to_string(t) + ": not t-chordal");
        const int chi = dichromatic_number(d).number;
        check.require(chi == 2, "t=" + std::to_string(t) + ": dichromatic number " +
                                    std::to_string(chi) + " != 2");
        const int omega = underlying_clique_number(d);
        check.require(omega <= 3, "t=" + std::to_string(t) + ": omega " + std::to_string(omega));
        if (t > 3)
            check.require(omega <= 2,
                          "t=" + std::to_string(t) + ": omega " + std::to_string(omega) + " > 2");
        artifacts.hard_sequence.push_back(d);
    }
    bool capped = false;
    try {
        build_hard_sequence(3, 3, 10000);
    } catch (const SizeCapExceededError&) {
        capped = true;
    }
    check.require(capped, "build_hard_sequence(3, 3, 10^4) did not hit the size cap");
}

void criterion2(Check& check) {
    const Digraph k1(1, {});
    IndependentSetFamily singleton(k1, {{1}});
    auto small = amplify(k1, singleton, 3, 100);
    check.require(verify_amplifier_postcondition(small, 1, 1 << 17),
                  "single-vertex case not vacuously true at k=1");
    artifacts.amplifier_runs.push_back({small, singleton});

    const Digraph c4 = directed_cycle(4);
    IndependentSetFamily diagonal(c4, {{1, 3}});
    auto big = amplify(c4, diagonal, 4, 1000);
    check.require(big.result.vertex_count() == 16, "expected 16 vertices");
    check.require(verify_amplifier_postcondition(big, 2, 1 << 17),
                  "4-cycle case not verified at k=2");

    // wiring mutation: sever the cyclic bundle from the last copy's set image
    // back to the first copy's, so neither color ring around the copies closes
    std::vector<Arc> cut;
    for (Vertex v : big.set_images.back()[0])
        for (Vertex u : big.set_images.front()[0])
            if (big.result.has_arc(v, u)) cut.push_back({v, u});
    check.require(cut.size() == 4, "expected a 4-arc wiring bundle");
    AmplifierOutput mutated{without_arcs(big.result, cut), big.copies, big.set_images};
    check.require(!verify_amplifier_postcondition(mutated, 2, 1 << 17),
                  "mutated wiring still passes at k=2");

    artifacts.amplifier_runs.push_back({big, diagonal});
}

void criterion3(Check& check) {
    const long long budget = 200'000'000;

    // (a) exhaustive small family
    const auto small = exhaustive_small_cnfs();
    for (int t : {3, 4})
        for (std::size_t i = 0; i < small.size(); ++i)
            check_reduction_case(check, small[i], t, budget,
                                 "exhaustive[" + std::to_string(i) + "] t=" + std::to_string(t));

    // (b) 100 random 3-CNFs with n <= 4, m <= 4
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> clauses;
        for (int i = 0; i < m; ++i) {
            std::vector<int> clause;
            for (int j = 0; j < 3; ++j) {
                const int var = 1 + static_cast<int>(rng() % n);
                clause.push_back(rng() % 2 ? var : -var);
            }
            clauses.push_back(clause);
        }
        const auto phi = make_cnf(n, clauses);
        for (int t : {3, 4})
            check_reduction_case(check, phi, t, budget,
                                 "random[" + std::to_string(trial) + "] t=" + std::to_string(t));
    }

    // (c) the 8-clause all-sign-patterns CNF over 3 variables
    std::vector<std::vector<int>> all_signs;
    for (int mask = 0; mask < 8; ++mask)
        all_signs.push_back({(mask & 4) ? 1 : -1, (mask & 2) ? 2 : -2, (mask & 1) ? 3 : -3});
    const auto hardest = make_cnf(3, all_signs);
    const auto art = build_reduction(hardest, 3);
    check.require(art.digraph.vertex_count() == 58,
                  "all-sign-patterns digraph has " + std::to_string(art.digraph.vertex_count()) +
                      " vertices, expected 58");
    const auto verdict = verify_reduction(hardest, 3, budget);
    check.require(verdict.equivalent && !verdict.satisfiable && verdict.chordal,
                  "all-sign-patterns case: " + verdict.detail);
    artifacts.reductions.push_back(art);
}

void criterion4(Check& check) {
    int occurrences = 0;
    for (const auto& art : artifacts.reductions) {
        for (std::size_t i = 0; i < art.formula.clauses.size(); ++i)
            for (std::size_t p = 0; p < art.formula.clauses[i].size(); ++p) {
                const int lit = art.formula.clauses[i][p];
                const auto& vg = art.map.variables[std::abs(lit) - 1];
                const auto& path = lit > 0 ? vg.p2 : vg.p1;
                std::vector<Vertex> vertices(path.begin() + 1, path.end() - 1);
                vertices.push_back(art.map.clauses[i].w[p]);
                auto min_it = std::min_element(vertices.begin(), vertices.end());
                std::rotate(vertices.begin(), min_it, vertices.end());
                InducedCycleCertificate cert{vertices};
                check.require(cert.valid_in(art.digraph),
                              "chord cycle is not induced in some instance");
                check.require(cert.length() == art.t, "chord cycle has length " +
                                                          std::to_string(cert.length()) +
                                                          " != t=" + std::to_string(art.t));
                artifacts.cycle_certificates.push_back({art.digraph, cert});
                ++occurrences;
            }
    }
    check.require(occurrences > 500, "corpus unexpectedly small: " + std::to_string(occurrences) +
                                         " literal occurrences");
}

void criterion5(Check& check) {
    const int l = 3;
    std::mt19937 rng(13571113);
    int accepted = 0;
    long long tries = 0;
    while (accepted < 500) {
        ++tries;
        if (tries > 2'000'000) {
            check.require(false, "could not sample 500 class members");
            return;
        }
        const int n = 1 + static_cast<int>(rng() % 8);
        const double p = 0.1 + 0.1 * (tries % 9);
        const Digraph d = oracles::random_digraph(rng, n, p);
        if (!in_class_c_l(d, l).member) continue;
        ++accepted;
        const int chi = dichromatic_number(d).number;
        const int omega = underlying_clique_number(d);
        check.require(chi <= power(l + 1, omega),
                      "violation: dichi=" + std::to_string(chi) + " omega=" +
                          std::to_string(omega) + " on a class member with " + std::to_string(n) +
                          " vertices");
    }
}

void criterion6(Check& check) {
    std::mt19937 rng(24681012);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const double p = 0.1 + 0.08 * (trial % 10);
        const Digraph d = oracles::random_digraph(rng, n, p);

        check.require(dichromatic_number(d).number == oracles::naive_dichromatic_number(d),
                      "dichromatic number disagrees with the naive oracle");

        const auto cycles = oracles::subset_induced_cycles(d);
        for (int t = 2; t <= 5; ++t) {
            bool expect = true;
            for (const auto& c : cycles) expect = expect && static_cast<int>(c.size()) == t;
            const auto r = is_t_chordal(d, t);
            check.require(r.chordal == expect, "chordality disagrees with enumeration");
            if (!r.chordal)
                check.require(r.witness->valid_in(d) && r.witness->length() != t,
                              "bad chordality witness");
        }

        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 1);
        check.require(is_t_chordal(d, 2).chordal == oracles::subset_acyclic(d, all),
                      "2-chordality disagrees with acyclicity");
    }
}

void criterion7(Check& check) {
    for (const auto& d : artifacts.hard_sequence)
        check.require(validators::simple(d), "hard-sequence member is not simple");

    for (const auto& [out, family] : artifacts.amplifier_runs) {
        check.require(validators::amplifier_output(out, family),
                      "amplifier output fails invariant re-check");
        for (const auto& set : family.sets)
            check.require(validators::independent_in(family.host, set),
                          "family set not independent in its host");
    }

    for (const auto& art : artifacts.reductions) {
        check.require(validators::simple(art.digraph), "reduction digraph is not simple");
        check.require(validators::reduction_vertex_count(art),
                      "reduction vertex count mismatch");
    }

    for (const auto& [d, cert] : artifacts.cycle_certificates)
        check.require(validators::cycle_certificate(d, cert.vertices),
                      "stored certificate fails independent validation");

    check.require(!artifacts.hard_sequence.empty() && !artifacts.amplifier_runs.empty() &&
                      !artifacts.reductions.empty() && !artifacts.cycle_certificates.empty(),
                  "artifact pool incomplete");
}

}  // namespace

int main() {
    Suite suite;
    suite.run(1, "hard-sequence desk scale (t in {3,4,5}; size cap at n=3)", 1.0, criterion1);
    suite.run(2, "amplifier postcondition by exhaustive dicoloring enumeration", 30.0, criterion2);
    suite.run(3, "reduction equivalence (exhaustive, random, all-sign-patterns)", 120.0,
              criterion3);
    suite.run(4, "chord-closed cycles have length exactly t", 30.0, criterion4);
    suite.run(5, "dichi <= (l+1)^omega over 500 class-C_3 members", 60.0, criterion5);
    suite.run(6, "solver/oracle equivalence on 200 random digraphs", 60.0, criterion6);
    suite.run(7, "invariant suite over all produced artifacts", 30.0, criterion7);

    std::printf("acceptance: %d/%d criteria passed\n", suite.passed, suite.passed + suite.failed);
    return suite.failed == 0 ? 0 : 1;
}
