#include "cli/commands.hpp"

#include "cli/expr.hpp"
#include "hopfmzv/hopfmzv.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace hopfmzv::cli {

namespace {

struct CharacterOptions {
    std::string name = "factorial";
    std::string file;
    unsigned max_weight = 12;

    void add_to(CLI::App* cmd) {
        auto* by_name = cmd->add_option("--char", name, "Built-in character (factorial)")
                            ->check(CLI::IsMember({"factorial"}));
        cmd->add_option("--char-file", file, "Character table (JSON)")->excludes(by_name);
        cmd->add_option("--char-max-weight", max_weight, "Weight horizon of the built-in character");
    }

    Character load() const { return file.empty() ? char_factorial(max_weight) : load_character(file); }
};

void print_element(std::ostream& out, const Element& e, bool human) {
    out << (human ? to_string(e) : serialize(e)) << '\n';
}

struct Invocation {
    CLI::App app{"Shuffle and quasi-shuffle Hopf algebras for multiple zeta values", "hopfmzv"};

    bool human = false;

    CLI::App* eval = nullptr;
    std::string eval_expr;

    CLI::App* coprod = nullptr;
    std::string coprod_side = "shuffle";
    std::string coprod_expr;

    CLI::App* antipode = nullptr;
    std::string antipode_algebra = "shuffle";
    std::string antipode_expr;

    CLI::App* psi = nullptr;
    CharacterOptions psi_char;
    std::string psi_expr;
    bool psi_definitional = false;

    CLI::App* psi_inv = nullptr;
    CharacterOptions psi_inv_char;
    std::string psi_inv_expr;

    CLI::App* matrix = nullptr;
    CharacterOptions matrix_char;
    unsigned matrix_weight = 0;
    std::string matrix_format = "table";

    CLI::App* mzv = nullptr;
    std::size_t mzv_terms = TruncationConfig{}.terms;
    std::string mzv_comp;

    CLI::App* verify = nullptr;
    std::string verify_suite = "all";
    unsigned verify_weight = 0;
    std::string verify_report;

    Invocation() {
        app.require_subcommand(1);
        app.add_flag("--human", human, "Print elements as readable sums instead of JSON");

        eval = app.add_subcommand("eval", "Evaluate an expression");
        eval->add_option("EXPR", eval_expr)->required();

        coprod = app.add_subcommand("coprod", "Coproduct of an expression");
        coprod->add_option("--side", coprod_side, "shuffle (Delta>=1) or dec (deconcatenation)")
            ->check(CLI::IsMember({"shuffle", "dec"}));
        coprod->add_option("EXPR", coprod_expr)->required();

        antipode = app.add_subcommand("antipode", "Antipode of an expression");
        antipode->add_option("--algebra", antipode_algebra, "shuffle or qsh")
            ->check(CLI::IsMember({"shuffle", "qsh"}));
        antipode->add_option("EXPR", antipode_expr)->required();

        psi = app.add_subcommand("psi", "Apply the induced morphism Psi_chi");
        psi_char.add_to(psi);
        psi->add_flag("--definitional", psi_definitional, "Use the per-composition definition (slow)");
        psi->add_option("EXPR", psi_expr)->required();

        psi_inv = app.add_subcommand("psi-inv", "Apply the inverse of Psi_chi");
        psi_inv_char.add_to(psi_inv);
        psi_inv->add_option("EXPR", psi_inv_expr)->required();

        matrix = app.add_subcommand("matrix", "Matrix of Psi_chi on one weight component");
        matrix->add_option("--weight", matrix_weight, "Weight n")->required()->check(CLI::Range(1u, 30u));
        matrix_char.add_to(matrix);
        matrix->add_option("--format", matrix_format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

        mzv = app.add_subcommand("mzv", "Truncated multiple zeta value");
        mzv->add_option("--terms", mzv_terms, "Truncation bound N")->check(CLI::PositiveNumber);
        mzv->add_option("COMPOSITION", mzv_comp, "e.g. \"[2,1]\"")->required();

        verify = app.add_subcommand("verify", "Run property suites");
        std::vector<std::string> suites{"all"};
        for (auto s : all_suites())
            suites.push_back(suite_name(s));
        verify->add_option("--suite", verify_suite, "Suite name")->check(CLI::IsMember(suites));
        verify->add_option("--max-weight", verify_weight, "Override every weight bound in the suite")
            ->check(CLI::Range(1u, 16u));
        verify->add_option("--report", verify_report, "Write a JSON report to this path");
    }
};

Composition parse_composition_literal(const std::string& text) {
    const Element e = evaluate(text);
    if (e.size() != 1 || e.begin()->second != 1)
        throw ParseError(0, "expected a single composition literal, got \"" + text + "\"");
    return e.begin()->first;
}

int run_verify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::vector<Suite> suites;
    if (inv.verify_suite == "all")
        suites = all_suites();
    else
        suites.push_back(*parse_suite(inv.verify_suite));
    const std::optional<unsigned> bound =
        inv.verify->count("--max-weight") ? std::optional<unsigned>(inv.verify_weight) : std::nullopt;

    std::vector<PropertyResult> results;
    const PropertyResult* first_failure = nullptr;
    for (Suite s : suites) {
        for (auto& r : run_suite(s, bound)) {
            out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.property << " (weight <= " << r.max_weight
                << ", " << r.checks << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
            results.push_back(std::move(r));
        }
    }
    for (const auto& r : results)
        if (!r.passed) {
            first_failure = &r;
            break;
        }
    if (!inv.verify_report.empty()) {
        std::ofstream report(inv.verify_report);
        if (!report) {
            err << "error: cannot write report " << inv.verify_report << '\n';
            return exit_character_file;
        }
        report << report_json(results) << '\n';
    }
    if (first_failure) {
        err << describe_failure(*first_failure) << '\n';
        return exit_verify_failed;
    }
    return exit_ok;
}

int dispatch(Invocation& inv, std::ostream& out, std::ostream& err) {
    if (*inv.eval) {
        print_element(out, evaluate(inv.eval_expr), inv.human);
    } else if (*inv.coprod) {
        const Element e = evaluate(inv.coprod_expr);
        const TensorElement t = inv.coprod_side == "dec" ? coproduct_dec(e) : coproduct_sh(e);
        out << (inv.human ? to_string(t) : serialize(t)) << '\n';
    } else if (*inv.antipode) {
        const Element e = evaluate(inv.antipode_expr);
        print_element(out, inv.antipode_algebra == "qsh" ? antipode_qsh(e) : antipode_sh(e), inv.human);
    } else if (*inv.psi) {
        const Element e = evaluate(inv.psi_expr);
        const InducedMorphism m(inv.psi_char.load());
        print_element(out, inv.psi_definitional ? m.apply_definitional(e) : m.apply(e), inv.human);
    } else if (*inv.psi_inv) {
        const Element e = evaluate(inv.psi_inv_expr);
        print_element(out, InducedMorphism(inv.psi_inv_char.load()).inverse_apply(e), inv.human);
    } else if (*inv.matrix) {
        const GradedMatrix m = psi_matrix(inv.matrix_char.load(), inv.matrix_weight);
        out << (inv.matrix_format == "csv" ? m.to_csv() : m.to_table());
    } else if (*inv.mzv) {
        const Composition c = parse_composition_literal(inv.mzv_comp);
        const double value = zeta_truncated(c, {inv.mzv_terms, TruncationConfig{}.tolerance});
        std::ostringstream v;
        v << std::setprecision(17) << value;
        out << "{\"comp\":\"" << c.to_literal() << "\",\"terms\":" << inv.mzv_terms << ",\"value\":" << v.str()
            << "}\n";
    } else if (*inv.verify) {
        return run_verify(inv, out, err);
    }
    return exit_ok;
}

} // namespace

std::string describe_failure(const PropertyResult& r) {
    return "verify failed: suite " + r.suite + ", property \"" + r.property + "\", weight <= " +
           std::to_string(r.max_weight) + ", counterexample: " + r.counterexample;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        inv.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << inv.app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << inv.app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return dispatch(inv, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const SingularityError& e) {
        err << "error: " << e.what() << " (s = " << e.part() << ")\n";
        return exit_singular;
    } catch (const CoverageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_coverage;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_divergent;
    } catch (const CharacterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_character_file;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace hopfmzv::cli
