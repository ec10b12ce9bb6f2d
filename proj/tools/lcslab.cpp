#include "lcslab/report.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

const char* kUsage =
    "lcslab - exact verification of LCS structures, Morse-Novikov cohomology,\n"
    "         and lattices on low-dimensional Lie algebras\n"
    "\n"
    "usage: lcslab <subcommand> [flags] [--json]\n"
    "\n"
    "subcommands:\n"
    "  validate        check the Jacobi identity of an algebra\n"
    "  profile         unimodular / solvable / nilpotent / type-I flags\n"
    "  cohomology      twisted or untwisted cohomology dims  [--theta F]\n"
    "  lcs-verify      verify an LCS pair                    --omega F --theta F\n"
    "  kind            first/second kind of an LCS pair      --omega F --theta F\n"
    "  lcs-search      solve the LCS equation and hunt for a witness --theta F\n"
    "  contact-verify  verify a contact form                 --eta F\n"
    "  contact-search  hunt for a contact form\n"
    "  derivations     basis of the derivation algebra\n"
    "  extend-contact  R x_D h from a contact pair           --eta F --derivation M\n"
    "  double-extend   double extension of a symplectic pair --beta F --derivation M\n"
    "  lattice-check   lattice verification                  --family g1|g2 --k N [--t0 pi/2|pi|2pi]\n"
    "  catalog         list | show <name> [--param a=1 --param b=1]\n"
    "\n"
    "input (one of): --algebra \"(24,-14,-12,0)\" | --file algebra.json |\n"
    "                --catalog d4p_0 [--param b=1]\n"
    "forms F are literals like \"e12 - e34\"; matrices M are JSON rows or @file.\n"
    "--seed N fixes randomized searches (default 0, env LCSLAB_SEED overrides).\n"
    "exit codes: 0 verified, 1 refuted, 2 inconclusive, 64 usage, 65 bad input.\n";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 64 : 0;
    }
    bool json = false;
    for (const auto& a : args) json |= (a == "--json");
    lcslab::RunResult r = lcslab::run_command(args);
    if (json)
        std::cout << r.report.to_json().dump() << "\n";
    else
        std::cout << r.report.text();
    if (r.exit_code == 64 || r.exit_code == 65) std::cerr << "error: " << r.report.message << "\n";
    return r.exit_code;
}
