#include "dyckres/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#ifndef DYCKRES_GOLDEN_DIR
#define DYCKRES_GOLDEN_DIR ""
#endif

namespace {

const char* describe(const std::string& command)
{
    if (command == "patterns") return "list admissible Dyck patterns of a set";
    if (command == "kac") return "composition series and Hilbert series of a Kac module";
    if (command == "simple") return "Hilbert series (and character) of a simple module";
    if (command == "betti") return "Betti table of the thickening";
    if (command == "strands") return "simple classes in each linear strand";
    if (command == "regularity") return "regularity by enumeration and by the corner formula";
    if (command == "rect-check") return "compare the rectangular closed form with enumeration";
    if (command == "render") return "draw the patterns of a set";
    return "check outputs against the golden files";
}

} // namespace

int main(int argc, char** argv)
{
    dyckres::cli::Invocation inv;
    inv.golden_dir = DYCKRES_GOLDEN_DIR;

    CLI::App app{"Dyck patterns, simple gl(m|n) characters and conjectural Betti tables of determinantal thickenings"};
    app.require_subcommand(1, 1);

    for (const std::string& name : dyckres::cli::commands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        if (name == "selftest") {
            sub->add_option("--golden", inv.golden_dir, "directory holding the golden files");
            continue;
        }
        sub->add_option("--lambda", inv.lambda, "partition, e.g. 3,2 (\"\" is the empty partition)")->required();
        sub->add_option("--n", inv.n, "rows allowed, dim W1")->required();
        sub->add_option("--m", inv.m, "dim W0 (defaults to n)");
        sub->add_option("--format", inv.format, "ascii or json");
        sub->add_option("--slack", inv.slack, "extra search columns beyond lambda_1 + n");
        sub->add_option("--jobs", inv.jobs, "worker threads for pattern enumeration");
        if (name == "patterns" || name == "render")
            sub->add_option("--set", inv.set, "K, A or A0");
        if (name == "strands")
            sub->add_option("--b", inv.b, "bullet count (default: every row)");
        if (name == "simple")
            sub->add_flag("--character", inv.character, "also print the g0-character");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    inv.command = app.get_subcommands().front()->get_name();
    return dyckres::cli::run(inv, std::cout, std::cerr);
}
