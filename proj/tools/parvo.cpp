// Command-line front end. Subcommands are wired up as the library lands;
// see README for usage.

#include "parvo/catalog.hpp"

#include <iostream>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    for (const parvo::Lattice& l : parvo::catalog())
        std::cout << l.name() << " dim=" << l.dim() << "\n";
    return 0;
}
