#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bdsa/bds.hpp"
#include "bdsa/relgen.hpp"

namespace bdsa {

/// Deterministic instance generator; identical params give byte-identical
/// instances. Probabilities are in thousandths to keep draws integer-only.
struct GeneratorParams {
    uint64_t seed = 0;
    int atom_count = 3;
    int label_count = 2;
    int density_milli = 500;      // chance a target atom is claimed per label
    int ideal_slack_milli = 0;    // chance of enlarging an ideal top per atom
    int j_shrink_milli = 0;       // chance of dropping a regular atom from J
};

Instance random_instance(const GeneratorParams& params);

/// Definition-literal Condition (L): searches words up to max_len (default
/// min(2^n, 16)) for a pair (word, A) that fixes every subset of A with a
/// forced singleton delta at every step. Prefix states are memoized on the
/// composed dual map, which is what makes the default bound complete.
bool brute_condition_L(const Instance& inst, int max_len = -1);

/// Literal evaluation of the six tail axioms on an element set, membership
/// given per element code. Word quantifiers range over the map semigroup.
/// Requires at most 5 atoms.
std::array<bool, 6> brute_tail_axioms(const Instance& inst, const std::vector<char>& membership);

std::vector<char> tail_membership_from_complement(const Instance& inst, Element complement_top);
std::vector<char> all_nonempty_membership(const Instance& inst);

/// Literal evaluation of the two covering characterizations of minimality;
/// infinite-word clauses are decided by cycle detection on the image-value
/// graph. Requires at most 5 atoms.
std::pair<bool, bool> brute_minimality_45(const Instance& inst);

/// Depth-indexed form of the least saturated hereditary ideal containing h:
/// B belongs iff for some depth k every length-k image lies in h's closure
/// carrier and every shorter image lies in it joined with the regular ideal.
PrincipalIdeal saturated_closure_reference(const Instance& inst, PrincipalIdeal h);

struct Digraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges;  // (source, target)
};

/// Encodes a digraph as an instance: atoms are vertices, each edge gets its
/// own label, and the edge's action sends sets containing its source to the
/// singleton of its target.
Instance import_digraph(const Digraph& graph);

struct GraphVerdicts {
    bool condition_l = false;
    bool condition_k = false;
    bool simple = false;
};

/// Standard finite-graph criteria, computed directly on the digraph:
/// (L) = every cycle has an exit; (K) = every cycle has an exit in every
/// saturated hereditary vertex quotient; simple = (L) plus cofinality to
/// every sink and every cycle vertex.
GraphVerdicts classical_graph_verdicts(const Digraph& graph);

Digraph random_digraph(uint64_t seed, int max_vertices = 6, int max_edges = 10);

/// Model check of the pair-system construction against the literal set of
/// pairs (A, class of B outside J) with componentwise operations and the
/// image-class action. Requires at most 3 atoms.
bool prime_model_matches(const Instance& inst, const PrimeInstance& prime);

}  // namespace bdsa
