#pragma once

#include <string>
#include <vector>

#include "bdsa/bds.hpp"

namespace bdsa {

struct LatticeEntry {
    Element top;
    bool hereditary = false;
    bool saturated = false;
    bool j_saturated = false;
};

enum class LatticeMode { Saturated, JSaturated };

/// All principal ideals passing hereditary plus the saturation flavour of
/// `mode`, sorted by popcount of the top and then canonical element order.
std::vector<LatticeEntry> enumerate_lattice(const Instance& inst, LatticeMode mode);

bool is_hereditary(const Instance& inst, Element top);
bool is_saturated(const Instance& inst, Element top);
bool is_j_saturated(const Instance& inst, Element top);

/// Smallest hereditary ideal containing a.
PrincipalIdeal hereditary_closure(const Instance& inst, Element a);

/// Least saturated hereditary ideal containing h; throws NotHereditary.
PrincipalIdeal saturated_closure(const Instance& inst, PrincipalIdeal h);

/// Quotient system by a hereditary ideal: surviving atoms keep their names,
/// actions restrict, ideal tops and J map through the quotient.
Instance quotient_instance(const Instance& inst, PrincipalIdeal h);

/// Top of {A : the class of A is regular in the quotient by h_top}.
Element bh_top(const Instance& inst, Element h_top);

/// Gauge-invariant ideal datum: hereditary J-saturated H plus an ideal S with
/// H ∪ J ⊆ S ⊆ B_H.
struct GaugePair {
    Element h_top;
    Element s_top;
    friend bool operator==(GaugePair, GaugePair) = default;
};

std::vector<GaugePair> gauge_pairs(const Instance& inst);

enum class MinimalRoute { Lattice, UniqueTail, Closure };

bool is_minimal(const Instance& inst, MinimalRoute route);
/// Public verdict (route Lattice).
bool is_minimal(const Instance& inst);
/// Runs all three routes; throws CrossCheckMismatch when they disagree.
bool is_minimal_agreed(const Instance& inst);

struct SimpleVerdict {
    bool simple = false;
    std::string explanation;
};

/// Simplicity of the associated algebra, decided as minimal ∧ Condition (L)
/// and cross-checked against the tail route and the minimal ∧ Condition (K)
/// route. Throws RelativeJNotSupported unless J is the full regular ideal.
SimpleVerdict is_simple(const Instance& inst);

}  // namespace bdsa
