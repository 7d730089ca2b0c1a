#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdsa/oracle.hpp"

namespace bdsa {

/// Mixed parameter schedule for the seeded corpus: up to 6 atoms, up to 4
/// labels, varying density, ideal slack and J shrink.
GeneratorParams corpus_params(uint64_t seed);
Instance corpus_instance(uint64_t seed);

/// One instance's worth of cross-validation. Each flag is an agreement test
/// between independent decision routes (or a route and a brute-force oracle).
struct BatteryResult {
    bool k_routes = false;            // quotient-L vs tails vs direct
    bool l_topfree = false;           // Condition (L) vs topological freeness
    bool minimal_routes = false;      // lattice vs unique-tail vs closure
    bool minimal_oracle = true;       // covering characterizations (≤ 5 atoms)
    bool simple_routes = false;       // minimal∧L vs tails vs minimal∧K
    bool l_brute = false;             // trajectory search vs literal search
    bool l_transfer_verbatim = false; // (L) equal on instance and pair system
    bool l_transfer_relative = false; // J-confined cycles vs pair system (L)
    std::vector<std::string> failures;
    bool all_core() const {
        return k_routes && l_topfree && minimal_routes && minimal_oracle && simple_routes &&
               l_brute;
    }
};

BatteryResult run_battery(const Instance& inst);

}  // namespace bdsa
