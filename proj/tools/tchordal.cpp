// Command-line surface over the library: chordality checks, exact dicoloring,
// clique numbers, the blow-up constructions, and the CNF reduction.
//
// Exit codes: 0 affirmative verdict / success, 1 negative verdict,
// 2 usage or input errors, 3 size-cap or budget exceedance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "tchordal/amplifier.hpp"
#include "tchordal/chordality.hpp"
#include "tchordal/dicoloring.hpp"
#include "tchordal/digraph.hpp"
#include "tchordal/io.hpp"
#include "tchordal/reduction.hpp"

namespace {

constexpr long long kDefaultNodeBudget = 10'000'000;
constexpr int kDefaultSizeCap = 100'000;

long long node_budget() {
    if (const char* env = std::getenv("TCHORDAL_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw tchordal::InvalidParameterError("TCHORDAL_BUDGET is not an integer");
        }
    }
    return kDefaultNodeBudget;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tchordal::Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

tchordal::Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tchordal::Error("cannot open '" + path + "'");
    return tchordal::read_dgf(in);
}

void save_digraph(const tchordal::Digraph& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw tchordal::Error("cannot write '" + path + "'");
    tchordal::write_dgf(d, out);
}

long long checked_power(long long base, int exponent) {
    long long value = 1;
    for (int i = 0; i < exponent; ++i) {
        if (value > (1LL << 62) / std::max(base, 1LL)) return 1LL << 62;
        value *= base;
    }
    return value;
}

void warn_on_odd_clauses(const tchordal::CnfFormula& phi) {
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        const auto& clause = phi.clauses[i];
        for (std::size_t a = 0; a < clause.size(); ++a)
            for (std::size_t b = a + 1; b < clause.size(); ++b)
                if (std::abs(clause[a]) == std::abs(clause[b])) {
                    std::cerr << "warning: clause " << i + 1
                              << (clause[a] == clause[b] ? " repeats a literal"
                                                         : " contains complementary literals")
                              << "\n";
                }
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tchordal;

    CLI::App app{"constructions and checks for digraphs whose induced directed cycles share one length"};
    app.require_subcommand(1);

    int t = 0, l = 0, n = 0;
    int cap = kDefaultSizeCap;
    std::string in_path, out_path, map_path, sets_path, digraph_path;

    auto* chordal = app.add_subcommand("chordal", "report t-chordality or a witness cycle");
    chordal->add_option("--t", t, "required cycle length")->required();
    chordal->add_option("file", in_path, "dgf digraph")->required();

    auto* dichi = app.add_subcommand("dichi", "exact dichromatic number with a witness dicoloring");
    dichi->add_option("file", in_path, "dgf digraph")->required();

    auto* omega = app.add_subcommand("omega", "clique number of the underlying graph");
    omega->add_option("file", in_path, "dgf digraph")->required();

    auto* class_check = app.add_subcommand(
        "class-check", "membership in class C_l (no induced cycle shorter than l, no induced l-vertex path)");
    class_check->add_option("--l", l, "class parameter")->required();
    class_check->add_option("file", in_path, "dgf digraph")->required();

    auto* construct = app.add_subcommand("construct", "n-th member of the hard sequence for t");
    construct->add_option("--t", t, "cycle length")->required();
    construct->add_option("--n", n, "sequence index")->required();
    construct->add_option("--cap", cap, "vertex cap");
    construct->add_option("-o,--out", out_path, "output dgf path")->required();

    auto* amplify_cmd = app.add_subcommand("amplify", "blow-up construction for a digraph and independent sets");
    amplify_cmd->add_option("--t", t, "cycle length")->required();
    amplify_cmd->add_option("-d,--digraph", digraph_path, "dgf digraph")->required();
    amplify_cmd->add_option("-s,--sets", sets_path, "independent sets file")->required();
    amplify_cmd->add_option("--cap", cap, "vertex cap");
    amplify_cmd->add_option("-o,--out", out_path, "output dgf path")->required();
    amplify_cmd->add_option("--map", map_path, "companion map path");

    auto* reduce = app.add_subcommand("reduce", "digraph whose non-t induced cycles encode satisfying assignments");
    reduce->add_option("--t", t, "cycle length")->required();
    reduce->add_option("cnf", in_path, "DIMACS CNF file")->required();
    reduce->add_option("-o,--out", out_path, "output dgf path")->required();
    reduce->add_option("--map", map_path, "gadget map path");

    auto* verify = app.add_subcommand("verify-reduction", "check satisfiability against t-chordality");
    verify->add_option("--t", t, "cycle length")->required();
    verify->add_option("cnf", in_path, "DIMACS CNF file")->required();

    auto* bound_check = app.add_subcommand("bound-check", "assert dichi <= (l+1)^omega for class-C_l members");
    bound_check->add_option("--l", l, "class parameter")->required();
    bound_check->add_option("file", in_path, "dgf digraph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const long long budget = node_budget();

        if (*chordal) {
            const auto d = load_digraph(in_path);
            const auto result = is_t_chordal(d, t, budget);
            if (result.chordal) {
                std::cout << "t-chordal\n";
                return 0;
            }
            std::cout << result.witness->render() << "\n";
            return 1;
        }

        if (*dichi) {
            const auto d = load_digraph(in_path);
            const auto result = dichromatic_number(d);
            std::cout << result.number << "\n" << result.witness.render() << "\n";
            return 0;
        }

        if (*omega) {
            std::cout << underlying_clique_number(load_digraph(in_path)) << "\n";
            return 0;
        }

        if (*class_check) {
            const auto d = load_digraph(in_path);
            const auto result = in_class_c_l(d, l, budget);
            if (result.member) {
                std::cout << "member\n";
                return 0;
            }
            std::cout << (result.cycle ? result.cycle->render() : result.path->render()) << "\n";
            return 1;
        }

        if (*construct) {
            const auto d = build_hard_sequence(t, n, cap);
            save_digraph(d, out_path);
            std::cout << "wrote " << out_path << ": " << d.vertex_count() << " vertices, "
                      << d.arc_count() << " arcs\n";
            return 0;
        }

        if (*amplify_cmd) {
            const auto d = load_digraph(digraph_path);
            const auto family = parse_sets_file(slurp(sets_path), d);
            const auto out = amplify(d, family, t, cap);
            save_digraph(out.result, out_path);
            if (!map_path.empty()) {
                std::ofstream map_file(map_path);
                if (!map_file) throw Error("cannot write '" + map_path + "'");
                write_amplifier_map(out, map_file);
            }
            std::cout << "wrote " << out_path << ": " << out.result.vertex_count()
                      << " vertices, " << out.result.arc_count() << " arcs, "
                      << out.copies.size() << " copies\n";
            return 0;
        }

        if (*reduce) {
            const auto phi = parse_dimacs_cnf(slurp(in_path));
            warn_on_odd_clauses(phi);
            const auto art = build_reduction(phi, t);
            save_digraph(art.digraph, out_path);
            if (!map_path.empty()) {
                std::ofstream map_file(map_path);
                if (!map_file) throw Error("cannot write '" + map_path + "'");
                write_gadget_map(art, map_file);
            }
            std::cout << "wrote " << out_path << ": " << art.digraph.vertex_count()
                      << " vertices, " << art.digraph.arc_count() << " arcs\n";
            return 0;
        }

        if (*verify) {
            const auto phi = parse_dimacs_cnf(slurp(in_path));
            const auto verdict = verify_reduction(phi, t, budget);
            if (verdict.equivalent) {
                std::cout << "Equivalent: " << (verdict.satisfiable ? "Sat" : "Unsat") << ", "
                          << (verdict.chordal ? "Chordal" : "NotChordal") << "\n";
                return 0;
            }
            std::cout << "CounterExample: " << verdict.detail << "\n";
            return 1;
        }

        if (*bound_check) {
            const auto d = load_digraph(in_path);
            const auto membership = in_class_c_l(d, l, budget);
            if (!membership.member) {
                std::cout << "not a member: "
                          << (membership.cycle ? membership.cycle->render()
                                               : membership.path->render())
                          << "\n";
                return 1;
            }
            const int chi = dichromatic_number(d).number;
            const int om = underlying_clique_number(d);
            const long long bound = checked_power(l + 1, om);
            if (chi <= bound) {
                std::cout << "bound holds: dichi=" << chi << " omega=" << om << " (l+1)^omega="
                          << bound << "\n";
                return 0;
            }
            std::cout << "bound violated: dichi=" << chi << " omega=" << om << " (l+1)^omega="
                      << bound << "\n";
            return 1;
        }
    } catch (const tchordal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tchordal::SizeCapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tchordal::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tchordal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
