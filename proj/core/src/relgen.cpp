#include "bdsa/relgen.hpp"

#include <algorithm>

#include "bdsa/props.hpp"

namespace bdsa {

PrimeInstance to_generalized(const Instance& inst) {
    const int n = inst.atom_count();
    const Element defect_base = inst.regular_top() - inst.j_top();

    std::vector<PrimeAtomTag> tags;
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        tags.push_back({false, a});
        names.push_back(inst.universe().name(a));
    }
    std::vector<int> defect_index(n, -1);
    for (int a = 0; a < n; ++a) {
        if (!defect_base.test(a)) continue;
        std::string candidate = inst.universe().name(a) + "_dft";
        while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += '_';
        defect_index[a] = static_cast<int>(names.size());
        tags.push_back({true, a});
        names.push_back(candidate);
    }

    auto lift = [&](Element e) {
        // Diagonal copy plus defect copies of the part outside J.
        Element out{e.bits};
        uint32_t rest = (e & defect_base).bits;
        while (rest) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            out |= Element::atom(defect_index[a]);
        }
        return out;
    };

    InstanceData data;
    data.atoms = names;
    data.labels = inst.labels();
    data.images.resize(inst.label_count());
    for (int l = 0; l < inst.label_count(); ++l) {
        data.images[l].assign(names.size(), Element{});
        for (int a = 0; a < n; ++a) data.images[l][a] = lift(inst.action(l).images[a]);
        data.ideal_tops.push_back(lift(inst.ideal_top(l)));
    }
    return PrimeInstance{Instance::build(std::move(data)), std::move(tags)};
}

LPreservation check_L_preservation(const Instance& inst) {
    LPreservation out;
    out.base_holds = check_condition_L(inst).holds;
    out.prime_holds = check_condition_L(to_generalized(inst).instance).holds;
    return out;
}

}  // namespace bdsa
