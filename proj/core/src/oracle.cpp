#include "bdsa/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace bdsa {

namespace {

const char* kAtomNames[kHardAtomCap] = {"a", "b", "c", "d", "e", "f", "g", "h",
                                        "i", "j", "k", "m", "n", "o", "p", "q",
                                        "r", "s", "t", "u", "v", "w", "y", "z"};

std::string label_name(int i) {
    static const char* first[4] = {"x", "y", "z", "w"};
    if (i < 4) return first[i];
    return "l" + std::to_string(i);
}

uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

bool chance(std::mt19937_64& rng, int milli) {
    return static_cast<int>(draw(rng, 1000)) < milli;
}

}  // namespace

Instance random_instance(const GeneratorParams& params) {
    if (params.atom_count > kHardAtomCap)
        throw Error(ErrorKind::TooLarge, "generator atom count exceeds the hard cap");
    std::mt19937_64 rng(params.seed);
    const int n = params.atom_count;
    const int nl = params.label_count;

    InstanceData data;
    for (int a = 0; a < n; ++a) data.atoms.push_back(kAtomNames[a]);
    for (int l = 0; l < nl; ++l) data.labels.push_back(label_name(l));

    // Dual-map first: each target atom is claimed by at most one source per
    // label, so the image table is disjoint by construction.
    data.images.assign(nl, std::vector<Element>(n));
    for (int l = 0; l < nl; ++l)
        for (int b = 0; b < n; ++b)
            if (n > 0 && chance(rng, params.density_milli)) {
                int src = static_cast<int>(draw(rng, n));
                data.images[l][src] |= Element::atom(b);
            }

    data.ideal_tops.assign(nl, std::nullopt);
    for (int l = 0; l < nl; ++l) {
        Element range;
        for (const Element& img : data.images[l]) range |= img;
        Element top = range;
        for (int a = 0; a < n; ++a)
            if (!range.test(a) && chance(rng, params.ideal_slack_milli)) top |= Element::atom(a);
        data.ideal_tops[l] = top;
    }

    Element regular;
    for (int a = 0; a < n; ++a) {
        bool reg = false;
        for (int l = 0; l < nl; ++l)
            if (data.images[l][a] != Element{}) reg = true;
        if (reg) regular |= Element::atom(a);
    }
    Element j = regular;
    for (int a = 0; a < n; ++a)
        if (regular.test(a) && chance(rng, params.j_shrink_milli)) j = j - Element::atom(a);
    data.j_top = j;

    return Instance::build(std::move(data));
}

namespace {

// Literal per-step requirement: every nonempty subset of `s` is regular with
// delta exactly {label}.
bool step_forced(const Instance& inst, Element s, int label) {
    uint32_t sub = s.bits;
    while (true) {
        if (sub != 0) {
            Element b{sub};
            if (!b.subset_of(inst.regular_top())) return false;
            if (inst.delta_mask(b) != (uint64_t{1} << label)) return false;
        }
        if (sub == 0) break;
        sub = (sub - 1) & s.bits;
    }
    return true;
}

bool cycle_on(const PartialMap& f, Element a) {
    uint32_t rest = a.bits;
    while (rest) {
        int atom = std::countr_zero(rest);
        rest &= rest - 1;
        if (f.to[atom] != atom) return false;
    }
    for (size_t b = 0; b < f.to.size(); ++b)
        if (f.to[b] >= 0 && a.test(f.to[b]) && static_cast<int>(b) != f.to[b]) return false;
    return true;
}

bool exitfree_cycle_from(const Instance& inst, Element a, int max_len) {
    struct Frame {
        PartialMap f;
        Element s;
        int depth;
    };
    std::set<PartialMap> seen;
    std::vector<Frame> stack;
    stack.push_back({PartialMap::identity(inst.atom_count()), a, 0});
    seen.insert(stack.back().f);
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.depth >= max_len) continue;
        for (int l = 0; l < inst.label_count(); ++l) {
            if (!step_forced(inst, fr.s, l)) continue;
            PartialMap g;
            g.to.assign(inst.action(l).dual.begin(), inst.action(l).dual.end());
            PartialMap f2 = fr.f.compose_after(g);
            Element s2 = inst.apply_label(l, fr.s);
            // The wrap requirement at the closing step equals the depth-0
            // check with the first letter, which step_forced covered.
            if (cycle_on(f2, a)) return true;
            if (seen.insert(f2).second) stack.push_back({std::move(f2), s2, fr.depth + 1});
        }
    }
    return false;
}

}  // namespace

bool brute_condition_L(const Instance& inst, int max_len) {
    const int n = inst.atom_count();
    if (max_len < 0) {
        max_len = 16;
        if (n < 4) max_len = 1 << n;
    }
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t bits = 1; bits <= full && full != 0; ++bits)
        if (exitfree_cycle_from(inst, Element{bits}, max_len)) return false;
    return true;
}

std::vector<char> tail_membership_from_complement(const Instance& inst, Element complement_top) {
    std::vector<char> member(size_t{1} << inst.atom_count(), 0);
    for (size_t bits = 0; bits < member.size(); ++bits)
        member[bits] = !Element{static_cast<uint32_t>(bits)}.subset_of(complement_top);
    return member;
}

std::vector<char> all_nonempty_membership(const Instance& inst) {
    std::vector<char> member(size_t{1} << inst.atom_count(), 1);
    member[0] = 0;
    return member;
}

std::array<bool, 6> brute_tail_axioms(const Instance& inst, const std::vector<char>& membership) {
    const int n = inst.atom_count();
    if (n > 5) throw Error(ErrorKind::TooLarge, "tail axiom evaluation is limited to 5 atoms");
    const size_t count = size_t{1} << n;
    auto in_tail = [&](Element e) { return membership[e.bits] != 0; };

    std::array<bool, 6> ok;
    ok.fill(true);

    // (T1) the empty element is not a member.
    ok[0] = !in_tail(Element{});

    // (T2) membership pulls back through every action.
    for (uint32_t a = 0; a < count && ok[1]; ++a)
        for (int l = 0; l < inst.label_count() && ok[1]; ++l)
            if (in_tail(inst.apply_label(l, Element{a})) && !in_tail(Element{a})) ok[1] = false;

    // (T3) membership of a union passes to a part.
    for (uint32_t a = 0; a < count && ok[2]; ++a)
        for (uint32_t b = 0; b < count && ok[2]; ++b)
            if (in_tail(Element{a} | Element{b}) && !in_tail(Element{a}) && !in_tail(Element{b}))
                ok[2] = false;

    // (T4) upward closed.
    for (uint32_t a = 0; a < count && ok[3]; ++a)
        for (uint32_t b = 0; b < count && ok[3]; ++b)
            if (Element{a}.subset_of(Element{b}) && in_tail(Element{a}) && !in_tail(Element{b}))
                ok[3] = false;

    // (T5) regular members have a member image.
    for (uint32_t a = 0; a < count && ok[4]; ++a) {
        Element e{a};
        if (!in_tail(e) || !e.subset_of(inst.regular_top())) continue;
        bool some = false;
        for (int l = 0; l < inst.label_count() && !some; ++l)
            if (in_tail(inst.apply_label(l, e))) some = true;
        if (!some) ok[4] = false;
    }

    // (T6) two members have word images with a member intersection; words
    // range over the map semigroup (including the identity).
    MapSemigroup sg = semigroup_closure(inst);
    std::vector<std::vector<Element>> images(count);
    for (uint32_t a = 0; a < count; ++a) {
        std::set<Element> distinct;
        for (const auto& m : sg.members) {
            Element img;
            for (int atom = 0; atom < n; ++atom)
                if (m.map.to[atom] >= 0 && Element{a}.test(m.map.to[atom]))
                    img |= Element::atom(atom);
            distinct.insert(img);
        }
        images[a].assign(distinct.begin(), distinct.end());
    }
    for (uint32_t a = 0; a < count && ok[5]; ++a) {
        if (!in_tail(Element{a})) continue;
        for (uint32_t b = 0; b < count && ok[5]; ++b) {
            if (!in_tail(Element{b})) continue;
            bool some = false;
            for (const Element& ia : images[a]) {
                for (const Element& ib : images[b])
                    if (in_tail(ia & ib)) {
                        some = true;
                        break;
                    }
                if (some) break;
            }
            if (!some) ok[5] = false;
        }
    }
    return ok;
}

namespace {

Element literal_hereditary_top(const Instance& inst, Element a) {
    Element d = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int l = 0; l < inst.label_count(); ++l) {
            Element img = inst.apply_label(l, d);
            if (!img.subset_of(d)) {
                d |= img;
                changed = true;
            }
        }
    }
    return d;
}

// can_avoid[e] = some infinite label sequence keeps every image of e outside
// the ideal with top `h`. Greatest fixpoint over the value graph.
std::vector<char> avoidance_table(const Instance& inst, Element h) {
    const size_t count = size_t{1} << inst.atom_count();
    std::vector<char> can_avoid(count, 0);
    for (size_t e = 0; e < count; ++e)
        can_avoid[e] = !Element{static_cast<uint32_t>(e)}.subset_of(h);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t e = 0; e < count; ++e) {
            if (!can_avoid[e]) continue;
            bool has_successor = false;
            for (int l = 0; l < inst.label_count() && !has_successor; ++l)
                if (can_avoid[inst.apply_label(l, Element{static_cast<uint32_t>(e)}).bits])
                    has_successor = true;
            if (!has_successor) {
                can_avoid[e] = 0;
                changed = true;
            }
        }
    }
    return can_avoid;
}

}  // namespace

std::pair<bool, bool> brute_minimality_45(const Instance& inst) {
    const int n = inst.atom_count();
    if (n > 5) throw Error(ErrorKind::TooLarge, "minimality evaluation is limited to 5 atoms");
    const uint32_t full = inst.universe().full().bits;
    if (n == 0) return {true, true};

    bool v4 = true;
    bool v5 = true;
    for (uint32_t a = 1; a <= full; ++a) {
        Element h = literal_hereditary_top(inst, Element{a});
        std::vector<char> can_avoid = avoidance_table(inst, h);
        for (uint32_t b = 0; b <= full; ++b) {
            // Clause shared by both forms: some regular C with B \ C inside
            // the hereditary closure.
            bool has_c = false;
            bool has_good_c = false;
            uint32_t c = inst.regular_top().bits;
            while (true) {
                if ((Element{b} - Element{c}).subset_of(h)) {
                    has_c = true;
                    if (!can_avoid[c]) has_good_c = true;
                }
                if (c == 0) break;
                c = (c - 1) & inst.regular_top().bits;
            }
            if (!has_c || can_avoid[b]) v4 = false;
            if (!has_good_c) v5 = false;
        }
        if (!v4 && !v5) break;
    }
    return {v4, v5};
}

PrincipalIdeal saturated_closure_reference(const Instance& inst, PrincipalIdeal h) {
    Element carrier = literal_hereditary_top(inst, h.top);
    if (carrier != h.top)
        throw Error(ErrorKind::NotHereditary,
                    "top " + render_element(inst.universe(), h.top) + " is not hereditary");
    const int depth_bound = inst.atom_count() + 1;
    const Element h_plus_reg = h.top | inst.regular_top();

    Element out;
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t b = 0; b <= full; ++b) {
        // all_in[k] = every length-k image of b lies in h; all_in_join[k] =
        // every length-k image lies in h joined with the regular ideal.
        std::vector<char> all_in(depth_bound + 1, 1), all_in_join(depth_bound + 1, 1);
        std::vector<Element> layer{Element{b}};
        for (int k = 0; k <= depth_bound; ++k) {
            for (Element e : layer) {
                if (!e.subset_of(h.top)) all_in[k] = 0;
                if (!e.subset_of(h_plus_reg)) all_in_join[k] = 0;
            }
            if (k == depth_bound) break;
            std::set<Element> next;
            for (Element e : layer)
                for (int l = 0; l < inst.label_count(); ++l) next.insert(inst.apply_label(l, e));
            layer.assign(next.begin(), next.end());
        }
        for (int k = 0; k <= depth_bound; ++k) {
            if (!all_in[k]) continue;
            bool shorter_ok = true;
            for (int j = 0; j < k && shorter_ok; ++j)
                if (!all_in_join[j]) shorter_ok = false;
            if (shorter_ok) {
                out |= Element{b};
                break;
            }
        }
        if (full == 0) break;
    }
    return PrincipalIdeal{out};
}

Instance import_digraph(const Digraph& graph) {
    InstanceData data;
    data.atoms = graph.vertex_names;
    const int m = static_cast<int>(graph.edges.size());
    for (int e = 0; e < m; ++e) data.labels.push_back("e" + std::to_string(e));
    data.images.assign(m, std::vector<Element>(graph.vertex_names.size()));
    for (int e = 0; e < m; ++e) {
        auto [src, dst] = graph.edges[e];
        data.images[e][src] = Element::atom(dst);
    }
    data.ideal_tops.assign(m, std::nullopt);
    return Instance::build(std::move(data));
}

namespace {

std::vector<std::vector<int>> out_neighbours(const Digraph& g, const std::vector<bool>& removed) {
    std::vector<std::vector<int>> out(g.vertex_names.size());
    for (auto [s, t] : g.edges)
        if (!removed[s] && !removed[t]) out[s].push_back(t);
    return out;
}

// A cycle all of whose vertices have out-degree one.
bool graph_has_blind_cycle(const Digraph& g, const std::vector<bool>& removed) {
    const int n = static_cast<int>(g.vertex_names.size());
    auto out = out_neighbours(g, removed);
    for (int v = 0; v < n; ++v) {
        if (removed[v] || out[v].size() != 1) continue;
        int cur = v;
        std::vector<bool> on_path(n, false);
        while (!removed[cur] && out[cur].size() == 1 && !on_path[cur]) {
            on_path[cur] = true;
            cur = out[cur][0];
            if (cur == v) return true;
        }
    }
    return false;
}

std::vector<Element> reachability(const Digraph& g) {
    const int n = static_cast<int>(g.vertex_names.size());
    std::vector<std::vector<int>> out(n);
    for (auto [s, t] : g.edges) out[s].push_back(t);
    std::vector<Element> reach(n);
    for (int v = 0; v < n; ++v) {
        Element seen = Element::atom(v);
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int t : out[u])
                if (!seen.test(t)) {
                    seen |= Element::atom(t);
                    stack.push_back(t);
                }
        }
        reach[v] = seen;
    }
    return reach;
}

}  // namespace

GraphVerdicts classical_graph_verdicts(const Digraph& g) {
    const int n = static_cast<int>(g.vertex_names.size());
    GraphVerdicts v;
    std::vector<bool> none(n, false);
    v.condition_l = !graph_has_blind_cycle(g, none);

    // (K): every saturated hereditary vertex set leaves a quotient satisfying
    // (L). Hereditary: out-closed. Saturated: a vertex with at least one edge
    // whose targets all lie inside must lie inside.
    v.condition_k = true;
    std::vector<std::vector<int>> out(n);
    for (auto [s, t] : g.edges) out[s].push_back(t);
    for (uint32_t bits = 0; bits < (uint32_t{1} << n) && v.condition_k; ++bits) {
        std::vector<bool> removed(n, false);
        for (int i = 0; i < n; ++i) removed[i] = (bits >> i) & 1;
        bool hereditary = true;
        for (auto [s, t] : g.edges)
            if (removed[s] && !removed[t]) hereditary = false;
        if (!hereditary) continue;
        bool saturated = true;
        for (int u = 0; u < n && saturated; ++u) {
            if (removed[u] || out[u].empty()) continue;
            bool all_inside = true;
            for (int t : out[u])
                if (!removed[t]) all_inside = false;
            if (all_inside) saturated = false;
        }
        if (!saturated) continue;
        if (graph_has_blind_cycle(g, removed)) v.condition_k = false;
    }

    // Simplicity: (L) plus every vertex reaches every sink and every cycle
    // vertex.
    auto reach = reachability(g);
    Element sinks, cycle_vertices;
    for (int u = 0; u < n; ++u) {
        if (out[u].empty()) sinks |= Element::atom(u);
        for (int t : out[u])
            if (reach[t].test(u)) cycle_vertices |= Element::atom(u);
    }
    bool cofinal = true;
    for (int u = 0; u < n && cofinal; ++u)
        if (!sinks.subset_of(reach[u]) || !cycle_vertices.subset_of(reach[u])) cofinal = false;
    v.simple = v.condition_l && cofinal;
    return v;
}

Digraph random_digraph(uint64_t seed, int max_vertices, int max_edges) {
    std::mt19937_64 rng(seed);
    Digraph g;
    int n = 1 + static_cast<int>(draw(rng, max_vertices));
    for (int v = 0; v < n; ++v) g.vertex_names.push_back("v" + std::to_string(v));
    int m = static_cast<int>(draw(rng, max_edges + 1));
    for (int e = 0; e < m; ++e) {
        int s = static_cast<int>(draw(rng, n));
        int t = static_cast<int>(draw(rng, n));
        g.edges.push_back({s, t});
    }
    return g;
}

namespace {

struct LiteralPair {
    uint32_t a;  // element of the base algebra
    uint32_t k;  // class representative: part outside J, within reg ∪ nonreg
    friend auto operator<=>(const LiteralPair&, const LiteralPair&) = default;
};

}  // namespace

bool prime_model_matches(const Instance& inst, const PrimeInstance& prime) {
    const int n = inst.atom_count();
    if (n > 3) throw Error(ErrorKind::TooLarge, "pair-model check is limited to 3 atoms");
    const Element reg = inst.regular_top();
    const Element j = inst.j_top();

    // Literal pair set: (A, [B]) with A and B matching outside the regular
    // ideal; the class of B is represented by B \ J.
    std::set<LiteralPair> literal;
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t a = 0;; ++a) {
        for (uint32_t b = 0;; ++b) {
            Element ea{a}, eb{b};
            if ((ea - reg) == (eb - reg)) literal.insert({a, (eb - j).bits});
            if (b == full) break;
        }
        if (a == full) break;
    }

    // Image of a constructed prime element in literal coordinates.
    const Instance& p = prime.instance;
    auto project = [&](Element e) {
        LiteralPair out{0, 0};
        for (int i = 0; i < p.atom_count(); ++i) {
            if (!e.test(i)) continue;
            const PrimeAtomTag& tag = prime.tags[i];
            if (tag.defect) {
                out.k |= Element::atom(tag.base).bits;
            } else {
                out.a |= Element::atom(tag.base).bits;
                if (!reg.test(tag.base)) out.k |= Element::atom(tag.base).bits;
            }
        }
        return out;
    };

    // The projection must be a bijection onto the literal pair set...
    std::set<LiteralPair> seen;
    const uint32_t p_full = p.universe().full().bits;
    for (uint32_t e = 0;; ++e) {
        LiteralPair lp = project(Element{e});
        if (!literal.count(lp)) return false;
        if (!seen.insert(lp).second) return false;
        if (e == p_full) break;
    }
    if (seen.size() != literal.size()) return false;

    // ... and intertwine the actions: the literal action maps (A, [B]) to
    // (θ(A), [θ(A)]).
    for (uint32_t e = 0;; ++e) {
        for (int l = 0; l < p.label_count(); ++l) {
            LiteralPair before = project(Element{e});
            Element image = inst.apply_label(l, Element{before.a});
            LiteralPair expected{image.bits, (image - j).bits};
            if (project(p.apply_label(l, Element{e})) != expected) return false;
        }
        if (e == p_full) break;
    }

    // Ideal tops correspond to the diagonal pairs (C, [C]).
    for (int l = 0; l < p.label_count(); ++l) {
        LiteralPair got = project(p.ideal_top(l));
        LiteralPair expected{inst.ideal_top(l).bits, (inst.ideal_top(l) - j).bits};
        if (got != expected) return false;
    }

    // The regular part of the pair system is the diagonal copy of the
    // regular part of the base.
    LiteralPair got_reg = project(p.regular_top());
    LiteralPair expected_reg{reg.bits, 0};
    return got_reg == expected_reg;
}

}  // namespace bdsa
