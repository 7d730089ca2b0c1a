#include "bdsa/topograph.hpp"

namespace bdsa {

TopGraph build_graph(const Instance& inst) {
    TopGraph g;
    g.vertex_count = inst.atom_count();
    for (int l = 0; l < inst.label_count(); ++l)
        for (int a = 0; a < inst.atom_count(); ++a)
            if (inst.ideal_top(l).test(a)) g.edges.push_back({l, a, inst.action(l).dual[a]});
    return g;
}

std::vector<Loop> loops_without_entrances(const TopGraph& g) {
    // prev[v] = index of the unique edge with r = v, or -1.
    std::vector<int> incoming(g.vertex_count, 0);
    std::vector<int> prev(g.vertex_count, -1);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        int r = g.edges[i].r;
        if (r < 0) continue;
        if (++incoming[r] == 1)
            prev[r] = static_cast<int>(i);
        else
            prev[r] = -1;
    }

    std::vector<Loop> loops;
    std::vector<bool> claimed(g.vertex_count, false);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (claimed[v] || prev[v] < 0) continue;
        std::vector<int> path;
        std::vector<bool> on_path(g.vertex_count, false);
        int cur = v;
        on_path[v] = true;
        bool found = false;
        while (prev[cur] >= 0) {
            int e = prev[cur];
            path.push_back(e);
            cur = g.edges[e].atom;
            if (cur == v) {
                found = true;
                break;
            }
            if (on_path[cur] || claimed[cur]) break;
            on_path[cur] = true;
        }
        if (!found) continue;
        for (int e : path) claimed[g.edges[e].r] = true;
        loops.push_back({std::move(path)});
    }
    return loops;
}

bool is_topologically_free(const TopGraph& g) { return loops_without_entrances(g).empty(); }

VertexClasses vertex_classes(const TopGraph& g) {
    VertexClasses c;
    Element has_incoming;
    for (const auto& e : g.edges)
        if (e.r >= 0) has_incoming |= Element::atom(e.r);
    Element full = g.vertex_count == 0 ? Element{} : Element{(uint32_t{1} << g.vertex_count) - 1};
    c.fin = full;
    c.sce = full - has_incoming;
    c.rg = full - c.sce;
    c.sg = full - c.rg;
    return c;
}

TailDescriptor maximal_tail_from_orbit(const Instance& inst, const TopGraph& g, int start) {
    std::vector<int> orbit{start};
    Element orbit_set = Element::atom(start);
    int cur = start;
    while (true) {
        int chosen = -1;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].r == cur) {
                chosen = static_cast<int>(i);
                break;
            }
        if (chosen < 0) break;
        int next = g.edges[chosen].atom;
        if (orbit_set.test(next)) break;
        orbit.push_back(next);
        orbit_set |= Element::atom(next);
        cur = next;
    }

    auto fwd = forward_orbit_masks(inst);
    Element tail_atoms;
    for (int o : orbit) tail_atoms |= fwd[o];
    Element d = inst.universe().full() - tail_atoms;
    if (!is_tail_complement(inst, fwd, d))
        throw Error(ErrorKind::TailAxiomFailure,
                    "orbit tail with complement top " + render_element(inst.universe(), d) +
                        " fails the tail predicates");
    CyclicVerdict cv = is_cyclic_tail(inst, d);
    TailDescriptor t;
    t.complement_top = d;
    t.cyclic = cv.cyclic;
    t.base_atom = cv.base_atom;
    t.beta = cv.beta;
    return t;
}

std::string to_dot(const Instance& inst, const TopGraph& g) {
    std::string out = "digraph bds {\n  rankdir=LR;\n";
    for (int v = 0; v < g.vertex_count; ++v) out += "  \"" + inst.universe().name(v) + "\";\n";
    bool needs_infinity = false;
    for (const auto& e : g.edges)
        if (e.r < 0) needs_infinity = true;
    if (needs_infinity) out += "  \"\xE2\x88\x9E\" [shape=plaintext];\n";
    for (const auto& e : g.edges) {
        out += "  \"" + inst.universe().name(e.atom) + "\" -> ";
        if (e.r >= 0)
            out += "\"" + inst.universe().name(e.r) + "\" [label=\"" + inst.label(e.label) + "\"];\n";
        else
            out += "\"\xE2\x88\x9E\" [label=\"" + inst.label(e.label) + "\",style=dashed];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace bdsa
