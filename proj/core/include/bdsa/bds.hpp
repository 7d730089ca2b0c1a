#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdsa/boolcore.hpp"

namespace bdsa {

inline constexpr int kMaxLabels = 64;

/// Raw instance description as read from a file; validated by build_instance.
struct InstanceData {
    std::vector<std::string> atoms;
    std::vector<std::string> labels;
    /// images[label][atom] = θ_label({atom}); missing entries mean ∅.
    std::vector<std::vector<Element>> images;
    std::vector<std::optional<Element>> ideal_tops;
    std::optional<Element> j_top;
};

/// Validated dynamical system: finite Boolean algebra, one action per label,
/// a per-label ideal top C_α ⊇ range top, and an ideal top J ⊆ regular top.
class Instance {
public:
    static Instance build(InstanceData data);

    const AtomUniverse& universe() const { return universe_; }
    int atom_count() const { return universe_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int label_count() const { return static_cast<int>(labels_.size()); }
    int label_index(const std::string& name) const;
    const std::string& label(int l) const { return labels_[l]; }

    const Action& action(int l) const { return actions_[l]; }
    Element ideal_top(int l) const { return ideal_tops_[l]; }
    Element range_top(int l) const { return range_tops_[l]; }
    Element j_top() const { return j_top_; }
    Element regular_top() const { return regular_top_; }

    Element apply_label(int l, Element a) const;
    Element apply_word(std::span<const int> word, Element a) const;
    /// Labels α with θ_α(a) ≠ ∅, ascending.
    std::vector<int> delta(Element a) const;
    uint64_t delta_mask(Element a) const;
    uint64_t atom_delta_mask(int atom) const { return atom_delta_[atom]; }

    friend bool operator==(const Instance& a, const Instance& b);

private:
    AtomUniverse universe_;
    std::vector<std::string> labels_;
    std::vector<Action> actions_;
    std::vector<Element> ideal_tops_;
    std::vector<Element> range_tops_;
    Element j_top_;
    Element regular_top_;
    std::vector<uint64_t> atom_delta_;
};

inline Instance build_instance(InstanceData data) { return Instance::build(std::move(data)); }

/// Partial self-map of the atom set; to[b] = image of b, -1 undefined.
struct PartialMap {
    std::vector<int8_t> to;

    static PartialMap identity(int n);
    int apply(int atom) const { return to[atom]; }
    /// (f ∘ g)(b) = f(g(b)).
    PartialMap compose_after(const PartialMap& g) const;

    friend bool operator==(const PartialMap&, const PartialMap&) = default;
    friend auto operator<=>(const PartialMap& a, const PartialMap& b) { return a.to <=> b.to; }
};

/// Closure of the dual maps f_α under composition, with shortest witness
/// words and Cayley edges. members[0] is the identity with the empty witness;
/// the rest are the distinct maps f_w over nonempty words w.
struct MapSemigroup {
    struct Member {
        PartialMap map;
        std::vector<int> witness;
        std::vector<int> next;  // member index of map ∘ f_α, per label
    };
    std::vector<Member> members;
};

MapSemigroup semigroup_closure(const Instance& inst);

/// fwd[r] = {f_w(r) : w ∈ L*} as an element (includes r itself).
std::vector<Element> forward_orbit_masks(const Instance& inst);

std::string render_word(const Instance& inst, std::span<const int> word);

}  // namespace bdsa
