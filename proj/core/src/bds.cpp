#include "bdsa/bds.hpp"

#include <map>

namespace bdsa {

Instance Instance::build(InstanceData data) {
    Instance inst;
    inst.universe_ = AtomUniverse(std::move(data.atoms));
    const int n = inst.universe_.size();

    if (data.labels.size() > static_cast<size_t>(kMaxLabels))
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kMaxLabels) + " labels");
    for (size_t i = 0; i < data.labels.size(); ++i) {
        if (!valid_identifier(data.labels[i]))
            throw Error(ErrorKind::MalformedSyntax, "invalid label name '" + data.labels[i] + "'");
        for (size_t j = 0; j < i; ++j)
            if (data.labels[i] == data.labels[j])
                throw Error(ErrorKind::MalformedSyntax, "duplicate label '" + data.labels[i] + "'");
    }
    inst.labels_ = std::move(data.labels);
    const int nl = inst.label_count();

    data.images.resize(nl);
    data.ideal_tops.resize(nl);
    for (int l = 0; l < nl; ++l) {
        data.images[l].resize(n);
        for (Element& img : data.images[l])
            if (!img.subset_of(inst.universe_.full()))
                throw Error(ErrorKind::MalformedSyntax, "image outside the atom universe");
        inst.actions_.push_back(dualize_action(inst.universe_, data.images[l]));
        Element range;
        for (const Element& img : data.images[l]) range |= img;
        inst.range_tops_.push_back(range);
    }

    for (int l = 0; l < nl; ++l) {
        Element top = data.ideal_tops[l].value_or(inst.range_tops_[l]);
        if (!inst.range_tops_[l].subset_of(top))
            throw Error(ErrorKind::IdealTooSmall,
                        "'" + inst.labels_[l] + "': declared top " +
                            render_element(inst.universe_, top) + " does not contain the range top " +
                            render_element(inst.universe_, inst.range_tops_[l]));
        inst.ideal_tops_.push_back(top);
    }

    inst.atom_delta_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int l = 0; l < nl; ++l)
            if (!inst.actions_[l].images[a].empty()) inst.atom_delta_[a] |= uint64_t{1} << l;
    Element reg;
    for (int a = 0; a < n; ++a)
        if (inst.atom_delta_[a] != 0) reg |= Element::atom(a);
    inst.regular_top_ = reg;

    inst.j_top_ = data.j_top.value_or(reg);
    if (!inst.j_top_.subset_of(reg))
        throw Error(ErrorKind::JNotRegular,
                    "J top " + render_element(inst.universe_, inst.j_top_) +
                        " is not contained in the regular top " + render_element(inst.universe_, reg));
    return inst;
}

int Instance::label_index(const std::string& name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    return -1;
}

Element Instance::apply_label(int l, Element a) const {
    Element out;
    const auto& images = actions_[l].images;
    uint32_t rest = a.bits;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        out |= images[i];
    }
    return out;
}

Element Instance::apply_word(std::span<const int> word, Element a) const {
    for (int l : word) {
        if (l < 0 || l >= label_count()) throw Error(ErrorKind::UnknownLabel, "index out of range");
        a = apply_label(l, a);
    }
    return a;
}

uint64_t Instance::delta_mask(Element a) const {
    uint64_t mask = 0;
    uint32_t rest = a.bits;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        mask |= atom_delta_[i];
    }
    return mask;
}

std::vector<int> Instance::delta(Element a) const {
    std::vector<int> out;
    uint64_t mask = delta_mask(a);
    for (int l = 0; l < label_count(); ++l)
        if ((mask >> l) & 1) out.push_back(l);
    return out;
}

bool operator==(const Instance& a, const Instance& b) {
    return a.universe_ == b.universe_ && a.labels_ == b.labels_ && a.actions_ == b.actions_ &&
           a.ideal_tops_ == b.ideal_tops_ && a.j_top_ == b.j_top_;
}

PartialMap PartialMap::identity(int n) {
    PartialMap m;
    m.to.resize(n);
    for (int i = 0; i < n; ++i) m.to[i] = static_cast<int8_t>(i);
    return m;
}

PartialMap PartialMap::compose_after(const PartialMap& g) const {
    PartialMap out;
    out.to.resize(to.size());
    for (size_t b = 0; b < to.size(); ++b) {
        int mid = g.to[b];
        out.to[b] = mid < 0 ? int8_t{-1} : to[mid];
    }
    return out;
}

MapSemigroup semigroup_closure(const Instance& inst) {
    const int n = inst.atom_count();
    const int nl = inst.label_count();
    constexpr size_t kMemberCap = size_t{1} << 21;

    MapSemigroup sg;
    sg.members.push_back({PartialMap::identity(n), {}, std::vector<int>(nl, -1)});

    std::vector<PartialMap> generators;
    for (int l = 0; l < nl; ++l) {
        PartialMap g;
        g.to.assign(inst.action(l).dual.begin(), inst.action(l).dual.end());
        generators.push_back(std::move(g));
    }

    // Closure of {f_w : w nonempty} under right-composition, BFS order; the
    // first witness found is shortest, ties broken by label declaration order.
    std::map<PartialMap, int> index;
    for (size_t head = 0; head < sg.members.size(); ++head) {
        for (int l = 0; l < nl; ++l) {
            PartialMap composed = sg.members[head].map.compose_after(generators[l]);
            auto [it, inserted] = index.try_emplace(composed, static_cast<int>(sg.members.size()));
            if (inserted) {
                if (sg.members.size() >= kMemberCap)
                    throw Error(ErrorKind::TooLarge, "semigroup closure exceeds the member cap");
                std::vector<int> witness = sg.members[head].witness;
                witness.push_back(l);
                sg.members.push_back({std::move(composed), std::move(witness),
                                      std::vector<int>(nl, -1)});
            }
            sg.members[head].next[l] = it->second;
        }
    }
    return sg;
}

std::vector<Element> forward_orbit_masks(const Instance& inst) {
    const int n = inst.atom_count();
    const int nl = inst.label_count();
    std::vector<Element> fwd(n);
    for (int r = 0; r < n; ++r) {
        Element seen = Element::atom(r);
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int l = 0; l < nl; ++l) {
                int v = inst.action(l).dual[u];
                if (v >= 0 && !seen.test(v)) {
                    seen |= Element::atom(v);
                    stack.push_back(v);
                }
            }
        }
        fwd[r] = seen;
    }
    return fwd;
}

std::string render_word(const Instance& inst, std::span<const int> word) {
    std::string out;
    for (int l : word) out += inst.label(l);
    return out;
}

}  // namespace bdsa
