#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_weight_flags(CLI::App* cmd, cli::WeightFlags& w) {
    cmd->add_option("--strategy", w.strategy, "Minimum-weight strategy")
        ->check(CLI::IsMember({"auto", "direct", "residue", "both"}));
    cmd->add_option("--budget", w.budget, "Codeword budget for direct enumeration")->check(CLI::PositiveNumber);
    cmd->add_option("--residue-budget", w.residue_budget, "Word budget for the residue-field search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", w.threads, "Worker threads (0 = hardware concurrency)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isodual and self-dual cyclic codes over Z_{p^e}"};
    app.require_subcommand(1);

    cli::FactorArgs factor;
    auto* factor_cmd = app.add_subcommand("factor", "Factor x^n - 1 over F_p and lift it to Z_{p^e}");
    factor_cmd->add_option("--p", factor.p, "Prime p")->required();
    factor_cmd->add_option("--e", factor.e, "Nilpotency index e")->required();
    factor_cmd->add_option("--n", factor.n, "Length n")->required();
    factor_cmd->add_flag("--json", factor.json, "Emit JSON");

    cli::ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Build isodual / self-dual codes");
    construct_cmd->add_option("kind", construct.kind, "thm42, thm44, remark46, duadic or thm510")
        ->required()
        ->check(CLI::IsMember({"thm42", "thm44", "remark46", "duadic", "thm510"}));
    construct_cmd->add_option("--p", construct.p, "Prime p")->required();
    construct_cmd->add_option("--e", construct.e, "Nilpotency index e")->required();
    construct_cmd->add_option("--m", construct.m, "Odd length factor m")->required();
    construct_cmd->add_option("--a", construct.a, "Exponent a (length 2^a m)");
    construct_cmd->add_option("--g1", construct.g1, "thm44: first cofactor, e.g. \"x^5 + 3x^4 + 8x^3 + x^2 + 2x + 8\"");
    construct_cmd->add_option("--g2", construct.g2, "thm44: second cofactor");
    construct_cmd->add_option("--splitting", construct.splitting, "Index into the sorted splittings mod m");
    construct_cmd->add_flag("--verify", construct.verify, "Check every claim and compute minimum weights");
    construct_cmd->add_flag("--no-weight", construct.skip_weights, "With --verify, skip minimum weights");
    construct_cmd->add_option("--out", construct.out, "Write the JSON result to FILE");
    construct_cmd->add_flag("--json", construct.json, "Emit JSON on stdout");
    add_weight_flags(construct_cmd, construct.weight);

    cli::WeightArgs weight;
    auto* weight_cmd = app.add_subcommand("weight", "Minimum Hamming weight of a code file");
    weight_cmd->add_option("file", weight.file, "CyclicCode or construction JSON")->required();
    weight_cmd->add_option("--label", weight.label, "Pick one code from a construction file");
    weight_cmd->add_flag("--json", weight.json, "Emit JSON");
    add_weight_flags(weight_cmd, weight.weight);

    cli::SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Sweep parameters and record verified codes");
    search_cmd->add_option("--p", search.primes, "Primes")->required()->delimiter(',');
    search_cmd->add_option("--e", search.exponents, "Nilpotency indices")->delimiter(',');
    search_cmd->add_option("--m", search.m_range, "m or LO:HI");
    search_cmd->add_option("--a", search.a_range, "a or LO:HI");
    search_cmd->add_option("--kinds", search.kinds, "Constructions to run")->delimiter(',');
    search_cmd->add_option("--out", search.out, "JSON-lines results file (merged by key)");
    add_weight_flags(search_cmd, search.weight);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::ok : cli::invalid_input;
    }

    try {
        if (*factor_cmd) return cli::run_factor(factor);
        if (*construct_cmd) return cli::run_construct(construct);
        if (*weight_cmd) return cli::run_weight(weight);
        if (*search_cmd) return cli::run_search(search);
    } catch (const isodual::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "; min weight <= " << e.upper_bound() << " (upper bound)\n";
        return cli::budget_exceeded;
    } catch (const isodual::Error& e) {
        std::cerr << "error (" << isodual::to_string(e.code()) << "): " << e.what() << '\n';
        return cli::invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::invalid_input;
    }
    return cli::invalid_input;
}
