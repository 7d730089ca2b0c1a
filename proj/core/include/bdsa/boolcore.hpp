#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bdsa/errors.hpp"

namespace bdsa {

inline constexpr int kHardAtomCap = 24;

/// Element of a finite Boolean algebra, stored as a subset of the atom set.
/// Bit i corresponds to the i-th atom in declaration order.
struct Element {
    uint32_t bits = 0;

    static Element atom(int i) { return Element{uint32_t{1} << i}; }

    bool test(int i) const { return (bits >> i) & 1u; }
    bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    bool subset_of(Element other) const { return (bits & ~other.bits) == 0; }

    friend Element operator|(Element a, Element b) { return Element{a.bits | b.bits}; }
    friend Element operator&(Element a, Element b) { return Element{a.bits & b.bits}; }
    /// Relative complement a \ b.
    friend Element operator-(Element a, Element b) { return Element{a.bits & ~b.bits}; }
    Element& operator|=(Element o) { bits |= o.bits; return *this; }
    Element& operator&=(Element o) { bits &= o.bits; return *this; }

    friend bool operator==(Element a, Element b) = default;
    /// Canonical element order: numeric order of the bit pattern.
    friend std::strong_ordering operator<=>(Element a, Element b) { return a.bits <=> b.bits; }
};

/// Ordered set of named atoms; the order is fixed at construction and defines
/// the canonical element order. Size 0 encodes the one-element algebra {∅}.
class AtomUniverse {
public:
    AtomUniverse() = default;
    explicit AtomUniverse(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    Element full() const { return full_; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a named atom, -1 when absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const AtomUniverse& a, const AtomUniverse& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    Element full_;
};

bool valid_identifier(const std::string& text);

/// Enumeration cap for 2^n sweeps; default 12, BDSA_MAX_ATOMS raises it up to
/// the hard cap of 24.
int soft_atom_cap();
void require_enumerable(const AtomUniverse& universe);

/// Ideal of a finite Boolean algebra, stored by its top element.
struct PrincipalIdeal {
    Element top;
    bool contains(Element x) const { return x.subset_of(top); }
    friend bool operator==(PrincipalIdeal, PrincipalIdeal) = default;
};

/// Quotient by the principal ideal with top `removed`; classes are represented
/// by their part outside `removed`.
struct QuotientContext {
    Element removed;
};

Element quotient_map(const QuotientContext& ctx, Element a);

/// One label's action: per-atom image table together with the dual partial
/// atom map f (images[a] = θ({a}), f(b) = a iff b ∈ images[a], -1 undefined).
struct Action {
    std::vector<Element> images;
    std::vector<int> dual;
    friend bool operator==(const Action& a, const Action& b) { return a.images == b.images; }
};

/// Checks that the atom images are pairwise disjoint and builds the dual map.
Action dualize_action(const AtomUniverse& universe, const std::vector<Element>& images);

Element parse_element(const AtomUniverse& universe, const std::string& text);
std::string render_element(const AtomUniverse& universe, Element e);

}  // namespace bdsa
