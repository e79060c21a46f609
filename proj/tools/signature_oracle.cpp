// Prints the signature of each orbit representative as table rows.
// Used once to produce src/signature_table.inc; the unit tests recheck it.
#include "redn/orbits.hpp"

#include <iostream>
#include <set>

using namespace redn;

int main() {
    std::set<std::string> seen;
    for (OrbitLabel l : all_labels()) {
        std::string k = signature(representative(l)).key();
        if (!seen.insert(k).second) {
            std::cerr << "duplicate signature " << k << "\n";
            return 1;
        }
        std::cout << "        {\"" << k << "\", OrbitLabel::" << label_name(l) << "},\n";
    }
}
