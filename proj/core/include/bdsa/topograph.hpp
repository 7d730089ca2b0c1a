#pragma once

#include <string>
#include <vector>

#include "bdsa/props.hpp"

namespace bdsa {

/// Finite rendering of the associated partially defined graph: one vertex per
/// atom, one edge per (label, atom under the label's ideal top); d(e) is the
/// edge's atom and r(e) = f_label(atom), undefined (-1) outside the range.
struct TopGraph {
    struct Edge {
        int label;
        int atom;  // d(e)
        int r;     // r(e), -1 when undefined
    };
    int vertex_count = 0;
    std::vector<Edge> edges;  // sorted by (label, atom)
};

TopGraph build_graph(const Instance& inst);

/// Loop without entrances: a cycle e_1 ... e_n with d(e_i) = r(e_{i+1}),
/// r(e_1) = d(e_n), and r^{-1}(r(e_k)) = {e_k} at every k. Canonical
/// representative starts at the smallest base vertex.
struct Loop {
    std::vector<int> edge_indices;
};

std::vector<Loop> loops_without_entrances(const TopGraph& g);

/// Empty interior of the entrance-free base points; finite and discrete, so
/// this is emptiness of loops_without_entrances.
bool is_topologically_free(const TopGraph& g);

struct VertexClasses {
    Element sce;  // no incoming r-edge
    Element fin;  // all vertices (finite graph)
    Element rg;   // fin minus the closure of sce
    Element sg;   // complement of rg
};

VertexClasses vertex_classes(const TopGraph& g);

/// Builds the maximal tail generated by the greedy backward orbit from
/// `start`: repeatedly follow the canonically smallest edge into the current
/// vertex, stopping at a vertex with no incoming edge or on a repeat. Throws
/// TailAxiomFailure if the result fails the tail predicates (bug guard).
TailDescriptor maximal_tail_from_orbit(const Instance& inst, const TopGraph& g, int start);

/// Deterministic Graphviz text; edges run d -> r, dashed into a synthetic
/// "∞" node where r is undefined.
std::string to_dot(const Instance& inst, const TopGraph& g);

}  // namespace bdsa
