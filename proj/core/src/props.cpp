#include "bdsa/props.hpp"

#include <set>

#include "bdsa/ideals.hpp"

namespace bdsa {

std::optional<CycleWitness> find_cycle_no_exit(const Instance& inst) {
    return find_cycle_no_exit(inst, inst.universe().full());
}

std::optional<CycleWitness> find_cycle_no_exit(const Instance& inst, Element confine) {
    const int n = inst.atom_count();
    for (int a = 0; a < n; ++a) {
        Element start = Element::atom(a);
        if (!start.subset_of(confine)) continue;

        Element s = start;
        CycleWitness w;
        w.atom = a;
        w.trajectory.push_back(s);
        std::set<Element> seen{s};
        while (true) {
            // Every atom of the current set must share one singleton delta.
            uint64_t mask = 0;
            bool shared = true;
            bool first = true;
            uint32_t rest = s.bits;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                if (first) {
                    mask = inst.atom_delta_mask(b);
                    first = false;
                } else if (inst.atom_delta_mask(b) != mask) {
                    shared = false;
                    break;
                }
            }
            if (!shared || std::popcount(mask) != 1) break;
            int label = std::countr_zero(mask);
            s = inst.apply_label(label, s);
            if (!s.subset_of(confine)) break;
            w.word.push_back(label);
            w.trajectory.push_back(s);
            if (s == start) return w;
            if (!seen.insert(s).second) break;
        }
    }
    return std::nullopt;
}

bool revalidate(const Instance& inst, const CycleWitness& w) {
    const size_t n = w.word.size();
    if (n == 0 || w.trajectory.size() != n + 1) return false;
    if (w.trajectory.front() != Element::atom(w.atom)) return false;
    if (w.trajectory.back() != w.trajectory.front()) return false;
    for (size_t t = 0; t < n; ++t) {
        Element s = w.trajectory[t];
        if (s.empty()) return false;
        uint32_t rest = s.bits;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            if (inst.atom_delta_mask(b) != (uint64_t{1} << w.word[t])) return false;
        }
        if (inst.apply_label(w.word[t], s) != w.trajectory[t + 1]) return false;
    }
    return true;
}

LVerdict check_condition_L(const Instance& inst) {
    LVerdict v;
    v.witness = find_cycle_no_exit(inst);
    v.holds = !v.witness.has_value();
    return v;
}

namespace {

bool hereditary_top(const Instance& inst, Element d) {
    for (int l = 0; l < inst.label_count(); ++l)
        if (!inst.apply_label(l, d).subset_of(d)) return false;
    return true;
}

bool saturated_top(const Instance& inst, Element d, Element trigger_top) {
    uint32_t rest = (trigger_top - d).bits;
    while (rest) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        uint64_t delta = inst.atom_delta_mask(a);
        if (delta == 0) continue;
        bool all_inside = true;
        for (int l = 0; l < inst.label_count() && all_inside; ++l)
            if ((delta >> l) & 1)
                if (!inst.action(l).images[a].subset_of(d)) all_inside = false;
        if (all_inside) return false;
    }
    return true;
}

}  // namespace

bool is_tail_complement(const Instance& inst, const std::vector<Element>& fwd, Element d) {
    if (d == inst.universe().full()) return false;
    if (!hereditary_top(inst, d)) return false;
    if (!saturated_top(inst, d, inst.regular_top())) return false;
    // Pairwise condition: atoms p, q outside d need a common forward image
    // f_s(r) = p, f_t(r) = q at some atom r outside d.
    Element outside = inst.universe().full() - d;
    uint32_t pr = outside.bits;
    while (pr) {
        int p = std::countr_zero(pr);
        pr &= pr - 1;
        uint32_t qr = outside.bits;
        while (qr) {
            int q = std::countr_zero(qr);
            qr &= qr - 1;
            bool ok = false;
            uint32_t rr = outside.bits;
            while (rr && !ok) {
                int r = std::countr_zero(rr);
                rr &= rr - 1;
                if (fwd[r].test(p) && fwd[r].test(q)) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> shortest_return_word(const Instance& inst, int atom) {
    const int n = inst.atom_count();
    const int nl = inst.label_count();
    // Word graph: u -l-> v iff v ∈ θ_l({u}); return words of `atom` are the
    // labels of closed paths through it.
    Element start = Element::atom(atom);

    // Shortest closed-path length via BFS.
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    auto push_succ = [&](int u, auto&& fn) {
        for (int l = 0; l < nl; ++l) {
            uint32_t img = inst.action(l).images[u].bits;
            while (img) {
                int v = std::countr_zero(img);
                img &= img - 1;
                fn(v);
            }
        }
    };
    push_succ(atom, [&](int v) {
        if (dist[v] < 0) {
            dist[v] = 1;
            queue.push_back(v);
        }
    });
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        push_succ(u, [&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    if (dist[atom] < 0) return std::nullopt;
    const int len = dist[atom];

    // reach_exact[k] = atoms with a path of length exactly k to `atom`.
    std::vector<Element> reach_exact(len + 1);
    reach_exact[0] = start;
    for (int k = 1; k <= len; ++k) {
        Element r;
        for (int u = 0; u < n; ++u)
            for (int l = 0; l < nl; ++l)
                if (!(inst.action(l).images[u] & reach_exact[k - 1]).empty()) {
                    r |= Element::atom(u);
                    break;
                }
        reach_exact[k] = r;
    }

    // Greedy lexicographic choice among words of the minimal length.
    std::vector<int> word;
    Element frontier = start;
    for (int i = 1; i <= len; ++i) {
        for (int l = 0; l < nl; ++l) {
            Element next = (inst.apply_label(l, frontier)) & reach_exact[len - i];
            if (!next.empty()) {
                word.push_back(l);
                frontier = next;
                break;
            }
        }
    }
    return word;
}

bool returns_subset_of_power(const Instance& inst, int atom, const std::vector<int>& root) {
    const int m = static_cast<int>(root.size());
    const int nl = inst.label_count();
    std::vector<int> rev(root.rbegin(), root.rend());

    // Product of the reversed-word return automaton (state = atom, step
    // s ↦ f_l(s)) with the cyclic automaton of the reversed root. A reachable
    // state (atom, phase ≠ 0) after at least one step is a return word that is
    // not a power of the root.
    const int dead_phase = m;
    std::set<std::pair<int, int>> visited;
    std::vector<std::pair<int, int>> stack{{atom, 0}};
    visited.insert({atom, 0});
    while (!stack.empty()) {
        auto [s, p] = stack.back();
        stack.pop_back();
        for (int l = 0; l < nl; ++l) {
            int s2 = inst.action(l).dual[s];
            if (s2 < 0) continue;
            int p2 = (p == dead_phase || l != rev[p]) ? dead_phase : (p + 1) % m;
            if (s2 == atom && p2 != 0) return false;
            if (visited.insert({s2, p2}).second) stack.push_back({s2, p2});
        }
    }
    return true;
}

namespace {

CyclicVerdict cyclic_core(const Instance& inst, const std::vector<Element>& fwd, Element d) {
    Element outside = inst.universe().full() - d;
    uint32_t rest = outside.bits;
    while (rest) {
        int c = std::countr_zero(rest);
        rest &= rest - 1;
        if (fwd[c] != outside) continue;
        auto beta0 = shortest_return_word(inst, c);
        if (!beta0) continue;
        const int len = static_cast<int>(beta0->size());
        for (int dlen = 1; dlen <= len; ++dlen) {
            if (len % dlen != 0) continue;
            std::vector<int> root(beta0->begin(), beta0->begin() + dlen);
            int cur = c;
            for (int i = dlen - 1; i >= 0 && cur >= 0; --i) cur = inst.action(root[i]).dual[cur];
            if (cur != c) continue;
            if (returns_subset_of_power(inst, c, root)) return {true, c, root};
        }
    }
    return {};
}

}  // namespace

std::vector<TailDescriptor> enumerate_maximal_tails(const Instance& inst) {
    require_enumerable(inst.universe());
    auto fwd = forward_orbit_masks(inst);
    std::vector<TailDescriptor> tails;
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t bits = 0; bits < full || (bits == 0 && full == 0); ++bits) {
        Element d{bits};
        if (!is_tail_complement(inst, fwd, d)) {
            if (full == 0) break;
            continue;
        }
        TailDescriptor t;
        t.complement_top = d;
        CyclicVerdict cv = cyclic_core(inst, fwd, d);
        t.cyclic = cv.cyclic;
        t.base_atom = cv.base_atom;
        t.beta = cv.beta;
        tails.push_back(std::move(t));
        if (full == 0) break;
    }
    return tails;
}

CyclicVerdict is_cyclic_tail(const Instance& inst, Element complement_top) {
    auto fwd = forward_orbit_masks(inst);
    if (!is_tail_complement(inst, fwd, complement_top))
        throw Error(ErrorKind::InvalidTail,
                    "complement top " + render_element(inst.universe(), complement_top) +
                        " fails the tail predicates");
    return cyclic_core(inst, fwd, complement_top);
}

bool check_condition_K(const Instance& inst, KRoute route) {
    switch (route) {
        case KRoute::QuotientL: {
            for (const LatticeEntry& entry : enumerate_lattice(inst, LatticeMode::JSaturated)) {
                Instance quotient = quotient_instance(inst, PrincipalIdeal{entry.top});
                if (find_cycle_no_exit(quotient)) return false;
            }
            return true;
        }
        case KRoute::NoCyclicTails: {
            for (const TailDescriptor& t : enumerate_maximal_tails(inst))
                if (t.cyclic) return false;
            return true;
        }
        case KRoute::Direct: {
            for (int c = 0; c < inst.atom_count(); ++c) {
                auto beta0 = shortest_return_word(inst, c);
                if (!beta0) continue;
                const int len = static_cast<int>(beta0->size());
                for (int dlen = 1; dlen <= len; ++dlen) {
                    if (len % dlen != 0) continue;
                    std::vector<int> root(beta0->begin(), beta0->begin() + dlen);
                    int cur = c;
                    for (int i = dlen - 1; i >= 0 && cur >= 0; --i)
                        cur = inst.action(root[i]).dual[cur];
                    if (cur != c) continue;
                    if (returns_subset_of_power(inst, c, root)) return false;
                }
            }
            return true;
        }
    }
    return false;
}

bool check_condition_K(const Instance& inst) { return check_condition_K(inst, KRoute::QuotientL); }

bool check_condition_K_agreed(const Instance& inst) {
    bool q = check_condition_K(inst, KRoute::QuotientL);
    bool t = check_condition_K(inst, KRoute::NoCyclicTails);
    bool d = check_condition_K(inst, KRoute::Direct);
    if (q != t || q != d)
        throw Error(ErrorKind::CrossCheckMismatch,
                    std::string("Condition (K) routes disagree: quotient-L=") + (q ? "yes" : "no") +
                        " tails=" + (t ? "yes" : "no") + " direct=" + (d ? "yes" : "no"));
    return q;
}

}  // namespace bdsa
