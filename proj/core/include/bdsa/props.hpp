#pragma once

#include <optional>
#include <vector>

#include "bdsa/bds.hpp"

namespace bdsa {

/// Exit-free cycle at a single atom: the word fixes {atom}, and at every step
/// every atom of the trajectory set has the next letter as its only outgoing
/// label. trajectory holds S_0 = {atom}, ..., S_n = {atom}.
struct CycleWitness {
    std::vector<int> word;
    int atom = -1;
    std::vector<Element> trajectory;
};

/// Deterministic trajectory search for an exit-free cycle. When `confine` is
/// given, only witnesses whose trajectory stays inside it are reported.
std::optional<CycleWitness> find_cycle_no_exit(const Instance& inst);
std::optional<CycleWitness> find_cycle_no_exit(const Instance& inst, Element confine);

bool revalidate(const Instance& inst, const CycleWitness& witness);

struct LVerdict {
    bool holds = false;
    std::optional<CycleWitness> witness;
};

/// Condition (L): no exit-free cycle.
LVerdict check_condition_L(const Instance& inst);

/// Maximal tail, stored by the top of its complement ideal. When cyclic,
/// base_atom and beta carry the witness.
struct TailDescriptor {
    Element complement_top;
    bool cyclic = false;
    int base_atom = -1;
    std::vector<int> beta;
};

std::vector<TailDescriptor> enumerate_maximal_tails(const Instance& inst);

struct CyclicVerdict {
    bool cyclic = false;
    int base_atom = -1;
    std::vector<int> beta;
};

/// Throws InvalidTail when the complement fails the tail predicates.
CyclicVerdict is_cyclic_tail(const Instance& inst, Element complement_top);

/// Lexicographically smallest among the shortest nonempty words w with
/// f_w(atom) = atom; nullopt when the atom has no return word.
std::optional<std::vector<int>> shortest_return_word(const Instance& inst, int atom);

/// True when every nonempty return word of `atom` is a power of `root`.
bool returns_subset_of_power(const Instance& inst, int atom, const std::vector<int>& root);

enum class KRoute { QuotientL, NoCyclicTails, Direct };

bool check_condition_K(const Instance& inst, KRoute route);
/// Public verdict (route QuotientL).
bool check_condition_K(const Instance& inst);
/// Runs all three routes; throws CrossCheckMismatch when they disagree.
bool check_condition_K_agreed(const Instance& inst);

/// Tail predicates on a complement top (hereditary, saturated, pairwise
/// common-descendant condition on the atoms outside it).
bool is_tail_complement(const Instance& inst, const std::vector<Element>& fwd, Element d);

}  // namespace bdsa
