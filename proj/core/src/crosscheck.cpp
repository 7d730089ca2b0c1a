#include "bdsa/crosscheck.hpp"

#include "bdsa/ideals.hpp"
#include "bdsa/props.hpp"
#include "bdsa/topograph.hpp"

namespace bdsa {

GeneratorParams corpus_params(uint64_t seed) {
    GeneratorParams p;
    p.seed = seed;
    p.atom_count = 1 + static_cast<int>(seed % 6);
    p.label_count = 1 + static_cast<int>((seed / 6) % 4);
    p.density_milli = 250 + 125 * static_cast<int>(seed % 5);
    p.ideal_slack_milli = 250 * static_cast<int>(seed % 3);
    p.j_shrink_milli = 200 * static_cast<int>(seed % 5);
    return p;
}

Instance corpus_instance(uint64_t seed) { return random_instance(corpus_params(seed)); }

BatteryResult run_battery(const Instance& inst) {
    BatteryResult r;
    auto note = [&](const std::string& name) { r.failures.push_back(name); };

    bool k_q = check_condition_K(inst, KRoute::QuotientL);
    bool k_t = check_condition_K(inst, KRoute::NoCyclicTails);
    bool k_d = check_condition_K(inst, KRoute::Direct);
    r.k_routes = (k_q == k_t) && (k_q == k_d);
    if (!r.k_routes) note("condition-K route disagreement");

    LVerdict l = check_condition_L(inst);
    r.l_topfree = l.holds == is_topologically_free(build_graph(inst));
    if (!r.l_topfree) note("Condition (L) vs topological freeness");

    bool m_lat = is_minimal(inst, MinimalRoute::Lattice);
    bool m_tail = is_minimal(inst, MinimalRoute::UniqueTail);
    bool m_clo = is_minimal(inst, MinimalRoute::Closure);
    r.minimal_routes = (m_lat == m_tail) && (m_lat == m_clo);
    if (!r.minimal_routes) note("minimality route disagreement");

    if (inst.atom_count() <= 5) {
        auto [v4, v5] = brute_minimality_45(inst);
        r.minimal_oracle = (v4 == m_lat) && (v5 == m_lat);
        if (!r.minimal_oracle) note("minimality covering-characterization disagreement");
    }

    bool s_ml = m_lat && l.holds;
    bool s_tails;
    if (inst.atom_count() == 0) {
        s_tails = true;
    } else {
        auto tails = enumerate_maximal_tails(inst);
        s_tails = tails.size() == 1 && tails[0].complement_top.empty() && !tails[0].cyclic;
    }
    bool s_mk = m_lat && k_q;
    r.simple_routes = (s_ml == s_tails) && (s_ml == s_mk);
    if (!r.simple_routes) note("simplicity route disagreement");

    r.l_brute = l.holds == brute_condition_L(inst);
    if (!r.l_brute) note("Condition (L) vs literal word search");

    LPreservation pres = check_L_preservation(inst);
    r.l_transfer_verbatim = pres.base_holds == pres.prime_holds;
    if (!r.l_transfer_verbatim) note("verbatim (L)-transfer to the pair system");

    bool relative_l = !find_cycle_no_exit(inst, inst.j_top()).has_value();
    r.l_transfer_relative = relative_l == pres.prime_holds;
    if (!r.l_transfer_relative) note("J-confined (L)-transfer to the pair system");

    return r;
}

}  // namespace bdsa
