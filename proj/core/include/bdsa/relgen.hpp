#pragma once

#include <vector>

#include "bdsa/bds.hpp"

namespace bdsa {

/// Pair system built from a relative instance: one diagonal atom per original
/// atom plus one defect atom per regular atom outside J. The result is
/// non-relative (its J is its full regular ideal).
struct PrimeAtomTag {
    bool defect = false;
    int base = -1;  // original atom index
};

struct PrimeInstance {
    Instance instance;
    std::vector<PrimeAtomTag> tags;
};

PrimeInstance to_generalized(const Instance& inst);

struct LPreservation {
    bool base_holds = false;
    bool prime_holds = false;
};

/// Condition (L) on the instance and on its pair system. The two verdicts
/// agree exactly when every exit-free cycle of the base has a counterpart
/// whose trajectory leaves J; see THEORY.md for the precise transfer law.
LPreservation check_L_preservation(const Instance& inst);

}  // namespace bdsa
