#include "bdsa/ideals.hpp"

#include <algorithm>

#include "bdsa/props.hpp"

namespace bdsa {

bool is_hereditary(const Instance& inst, Element top) {
    for (int l = 0; l < inst.label_count(); ++l)
        if (!inst.apply_label(l, top).subset_of(top)) return false;
    return true;
}

namespace {

bool saturated_over(const Instance& inst, Element top, Element triggers) {
    uint32_t rest = (triggers - top).bits;
    while (rest) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        uint64_t delta = inst.atom_delta_mask(a);
        if (delta == 0) continue;
        bool all_inside = true;
        for (int l = 0; l < inst.label_count() && all_inside; ++l)
            if ((delta >> l) & 1)
                if (!inst.action(l).images[a].subset_of(top)) all_inside = false;
        if (all_inside) return false;
    }
    return true;
}

}  // namespace

bool is_saturated(const Instance& inst, Element top) {
    return saturated_over(inst, top, inst.regular_top());
}

bool is_j_saturated(const Instance& inst, Element top) {
    return saturated_over(inst, top, inst.j_top());
}

std::vector<LatticeEntry> enumerate_lattice(const Instance& inst, LatticeMode mode) {
    require_enumerable(inst.universe());
    std::vector<LatticeEntry> out;
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t bits = 0;; ++bits) {
        Element d{bits};
        if (is_hereditary(inst, d)) {
            LatticeEntry e{d, true, is_saturated(inst, d), is_j_saturated(inst, d)};
            if ((mode == LatticeMode::Saturated && e.saturated) ||
                (mode == LatticeMode::JSaturated && e.j_saturated))
                out.push_back(e);
        }
        if (bits == full) break;
    }
    std::sort(out.begin(), out.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
        if (a.top.count() != b.top.count()) return a.top.count() < b.top.count();
        return a.top < b.top;
    });
    return out;
}

PrincipalIdeal hereditary_closure(const Instance& inst, Element a) {
    Element d = a;
    while (true) {
        Element next = d;
        for (int l = 0; l < inst.label_count(); ++l) next |= inst.apply_label(l, d);
        if (next == d) break;
        d = next;
    }
    return PrincipalIdeal{d};
}

PrincipalIdeal saturated_closure(const Instance& inst, PrincipalIdeal h) {
    if (!is_hereditary(inst, h.top))
        throw Error(ErrorKind::NotHereditary,
                    "top " + render_element(inst.universe(), h.top) + " is not hereditary");
    Element d = h.top;
    bool changed = true;
    while (changed) {
        changed = false;
        uint32_t rest = (inst.regular_top() - d).bits;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t delta = inst.atom_delta_mask(a);
            bool all_inside = true;
            for (int l = 0; l < inst.label_count() && all_inside; ++l)
                if ((delta >> l) & 1)
                    if (!inst.action(l).images[a].subset_of(d)) all_inside = false;
            if (all_inside) {
                d |= Element::atom(a);
                changed = true;
            }
        }
    }
    return PrincipalIdeal{d};
}

Instance quotient_instance(const Instance& inst, PrincipalIdeal h) {
    if (!is_hereditary(inst, h.top))
        throw Error(ErrorKind::NotHereditary,
                    "top " + render_element(inst.universe(), h.top) + " is not hereditary");
    const Element removed = h.top;
    std::vector<int> new_index(inst.atom_count(), -1);
    InstanceData data;
    for (int a = 0; a < inst.atom_count(); ++a)
        if (!removed.test(a)) {
            new_index[a] = static_cast<int>(data.atoms.size());
            data.atoms.push_back(inst.universe().name(a));
        }
    data.labels = inst.labels();

    auto remap = [&](Element e) {
        Element out;
        uint32_t rest = (e - removed).bits;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            out |= Element::atom(new_index[a]);
        }
        return out;
    };

    data.images.resize(inst.label_count());
    for (int l = 0; l < inst.label_count(); ++l) {
        data.images[l].assign(data.atoms.size(), Element{});
        for (int a = 0; a < inst.atom_count(); ++a)
            if (new_index[a] >= 0) data.images[l][new_index[a]] = remap(inst.action(l).images[a]);
        data.ideal_tops.push_back(remap(inst.ideal_top(l)));
    }
    data.j_top = remap(inst.j_top());
    return Instance::build(std::move(data));
}

Element bh_top(const Instance& inst, Element h_top) {
    Element out = h_top;
    uint32_t rest = (inst.universe().full() - h_top).bits;
    while (rest) {
        int a = std::countr_zero(rest);
        rest &= rest - 1;
        for (int l = 0; l < inst.label_count(); ++l)
            if (!(inst.action(l).images[a] - h_top).empty()) {
                out |= Element::atom(a);
                break;
            }
    }
    return out;
}

std::vector<GaugePair> gauge_pairs(const Instance& inst) {
    require_enumerable(inst.universe());
    std::vector<GaugePair> pairs;
    const uint32_t full = inst.universe().full().bits;
    for (uint32_t bits = 0;; ++bits) {
        Element d{bits};
        if (is_hereditary(inst, d) && is_j_saturated(inst, d)) {
            Element base = d | inst.j_top();
            Element bh = bh_top(inst, d);
            Element free = bh - base;
            // All S with H ∪ J ⊆ S ⊆ B_H.
            uint32_t sub = free.bits;
            while (true) {
                pairs.push_back({d, base | Element{sub}});
                if (sub == 0) break;
                sub = (sub - 1) & free.bits;
            }
        }
        if (bits == full) break;
    }
    std::sort(pairs.begin(), pairs.end(), [](GaugePair a, GaugePair b) {
        if (a.h_top != b.h_top) return a.h_top < b.h_top;
        return a.s_top < b.s_top;
    });
    return pairs;
}

bool is_minimal(const Instance& inst, MinimalRoute route) {
    if (inst.atom_count() == 0) return true;
    switch (route) {
        case MinimalRoute::Lattice:
            return enumerate_lattice(inst, LatticeMode::Saturated).size() == 2;
        case MinimalRoute::UniqueTail: {
            auto tails = enumerate_maximal_tails(inst);
            return tails.size() == 1 && tails[0].complement_top.empty();
        }
        case MinimalRoute::Closure: {
            for (int a = 0; a < inst.atom_count(); ++a) {
                PrincipalIdeal h = hereditary_closure(inst, Element::atom(a));
                if (saturated_closure(inst, h).top != inst.universe().full()) return false;
            }
            return true;
        }
    }
    return false;
}

bool is_minimal(const Instance& inst) { return is_minimal(inst, MinimalRoute::Lattice); }

bool is_minimal_agreed(const Instance& inst) {
    bool lattice = is_minimal(inst, MinimalRoute::Lattice);
    bool tail = is_minimal(inst, MinimalRoute::UniqueTail);
    bool closure = is_minimal(inst, MinimalRoute::Closure);
    if (lattice != tail || lattice != closure)
        throw Error(ErrorKind::CrossCheckMismatch,
                    std::string("minimality routes disagree: lattice=") + (lattice ? "yes" : "no") +
                        " unique-tail=" + (tail ? "yes" : "no") +
                        " closure=" + (closure ? "yes" : "no"));
    return lattice;
}

SimpleVerdict is_simple(const Instance& inst) {
    if (inst.j_top() != inst.regular_top())
        throw Error(ErrorKind::RelativeJNotSupported,
                    "J top " + render_element(inst.universe(), inst.j_top()) +
                        " is a proper subideal of the regular ideal " +
                        render_element(inst.universe(), inst.regular_top()));

    bool minimal = is_minimal_agreed(inst);
    LVerdict l = check_condition_L(inst);
    bool by_minimal_l = minimal && l.holds;

    bool by_tails;
    if (inst.atom_count() == 0) {
        by_tails = true;
    } else {
        auto tails = enumerate_maximal_tails(inst);
        by_tails = tails.size() == 1 && tails[0].complement_top.empty() && !tails[0].cyclic;
    }
    bool by_minimal_k = minimal && check_condition_K_agreed(inst);

    if (by_minimal_l != by_tails || by_minimal_l != by_minimal_k)
        throw Error(ErrorKind::CrossCheckMismatch,
                    std::string("simplicity routes disagree: minimal+L=") +
                        (by_minimal_l ? "yes" : "no") + " tails=" + (by_tails ? "yes" : "no") +
                        " minimal+K=" + (by_minimal_k ? "yes" : "no"));

    SimpleVerdict v;
    v.simple = by_minimal_l;
    if (inst.atom_count() == 0) {
        v.explanation = "degenerate one-element algebra";
    } else if (v.simple) {
        v.explanation = "minimal and Condition (L) holds";
    } else if (!minimal) {
        Element witness;
        for (const LatticeEntry& e : enumerate_lattice(inst, LatticeMode::Saturated))
            if (!e.top.empty() && e.top != inst.universe().full()) {
                witness = e.top;
                break;
            }
        v.explanation =
            "not minimal; saturated hereditary ideal top=" + render_element(inst.universe(), witness);
    } else {
        v.explanation = "Condition (L) fails; cycle word=" + render_word(inst, l.witness->word) +
                        " base=" + inst.universe().name(l.witness->atom);
    }
    return v;
}

}  // namespace bdsa
