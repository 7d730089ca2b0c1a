#include "bdsa/report.hpp"

#include <algorithm>
#include <future>

#include "bdsa/oracle.hpp"
#include "json.hpp"

namespace bdsa {

AnalysisReport build_report(const Instance& inst, int threads) {
    AnalysisReport r(inst);
    r.degenerate = inst.atom_count() == 0;

    auto part_l = [&] { return check_condition_L(inst); };
    auto part_k = [&] { return check_condition_K_agreed(inst); };
    auto part_tails = [&] { return enumerate_maximal_tails(inst); };
    auto part_lattice = [&] {
        std::vector<LatticeEntry> lattice;
        const uint32_t full = inst.universe().full().bits;
        for (uint32_t bits = 0;; ++bits) {
            Element d{bits};
            if (is_hereditary(inst, d)) {
                LatticeEntry e{d, true, is_saturated(inst, d), is_j_saturated(inst, d)};
                if (e.saturated || e.j_saturated) lattice.push_back(e);
            }
            if (bits == full) break;
        }
        std::sort(lattice.begin(), lattice.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
            if (a.top.count() != b.top.count()) return a.top.count() < b.top.count();
            return a.top < b.top;
        });
        return lattice;
    };
    auto part_pairs = [&] { return gauge_pairs(inst); };
    auto part_minimal = [&] { return is_minimal_agreed(inst); };
    auto part_graph = [&] { return build_graph(inst); };

    if (threads > 1) {
        auto fl = std::async(std::launch::async, part_l);
        auto fk = std::async(std::launch::async, part_k);
        auto ft = std::async(std::launch::async, part_tails);
        auto flat = std::async(std::launch::async, part_lattice);
        auto fp = std::async(std::launch::async, part_pairs);
        auto fm = std::async(std::launch::async, part_minimal);
        auto fg = std::async(std::launch::async, part_graph);
        LVerdict l = fl.get();
        r.condition_l = l.holds;
        r.cycle_witness = l.witness;
        r.condition_k = fk.get();
        r.tails = ft.get();
        r.lattice = flat.get();
        r.pairs = fp.get();
        r.minimal = fm.get();
        r.graph = fg.get();
    } else {
        LVerdict l = part_l();
        r.condition_l = l.holds;
        r.cycle_witness = l.witness;
        r.condition_k = part_k();
        r.tails = part_tails();
        r.lattice = part_lattice();
        r.pairs = part_pairs();
        r.minimal = part_minimal();
        r.graph = part_graph();
    }

    if (inst.j_top() == inst.regular_top()) {
        SimpleVerdict sv = is_simple(inst);
        r.simple = sv.simple;
        r.simple_explanation = sv.explanation;
    } else {
        r.simple_note = "RelativeJNotSupported: simplicity is decided only when J is the full "
                        "regular ideal";
    }

    for (const auto& e : r.graph.edges)
        if (e.r >= 0) ++r.dom_r;
    r.entrance_free_loops = static_cast<int>(loops_without_entrances(r.graph).size());

    // Oracle cross-checks within the brute-force domain.
    if (inst.atom_count() <= 6 && r.condition_l != brute_condition_L(inst))
        throw Error(ErrorKind::CrossCheckMismatch,
                    "Condition (L) disagrees with the literal word search");
    if (inst.atom_count() <= 5) {
        auto [v4, v5] = brute_minimality_45(inst);
        if (v4 != r.minimal || v5 != r.minimal)
            throw Error(ErrorKind::CrossCheckMismatch,
                        "minimality disagrees with the covering characterizations");
    }
    return r;
}

namespace {

using nlohmann::json;

json tail_json(const Instance& inst, const TailDescriptor& t) {
    json out;
    out["complement"] = render_element(inst.universe(), t.complement_top);
    out["cyclic"] = t.cyclic;
    if (t.cyclic) {
        out["base"] = inst.universe().name(t.base_atom);
        out["beta"] = render_word(inst, t.beta);
    }
    return out;
}

}  // namespace

std::string report_json(const AnalysisReport& r) {
    const Instance& inst = r.instance;
    json out;
    out["schemaVersion"] = 1;

    json ji;
    ji["atoms"] = inst.universe().names();
    ji["labels"] = inst.labels();
    json tops;
    for (int l = 0; l < inst.label_count(); ++l)
        tops[inst.label(l)] = render_element(inst.universe(), inst.ideal_top(l));
    ji["idealTops"] = std::move(tops);
    ji["jTop"] = render_element(inst.universe(), inst.j_top());
    ji["regularTop"] = render_element(inst.universe(), inst.regular_top());
    ji["degenerate"] = r.degenerate;
    out["instance"] = std::move(ji);

    json verdicts;
    verdicts["conditionL"] = r.condition_l;
    verdicts["conditionK"] = r.condition_k;
    verdicts["minimal"] = r.minimal;
    if (r.simple)
        verdicts["simple"] = *r.simple;
    else
        verdicts["simple"] = nullptr;
    out["verdicts"] = std::move(verdicts);

    json witnesses = json::object();
    if (r.cycle_witness) {
        json c;
        c["word"] = render_word(inst, r.cycle_witness->word);
        c["atom"] = inst.universe().name(r.cycle_witness->atom);
        witnesses["cycle"] = std::move(c);
    }
    for (const auto& t : r.tails)
        if (t.cyclic) {
            witnesses["cyclicTail"] = tail_json(inst, t);
            break;
        }
    if (!r.simple_note.empty()) witnesses["simpleNote"] = r.simple_note;
    out["witnesses"] = std::move(witnesses);

    json lattice = json::array();
    for (const auto& e : r.lattice) {
        json entry;
        entry["top"] = render_element(inst.universe(), e.top);
        entry["hereditary"] = e.hereditary;
        entry["saturated"] = e.saturated;
        entry["jSaturated"] = e.j_saturated;
        lattice.push_back(std::move(entry));
    }
    out["lattice"] = std::move(lattice);

    json tails = json::array();
    for (const auto& t : r.tails) tails.push_back(tail_json(inst, t));
    out["maximalTails"] = std::move(tails);

    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json entry;
        entry["H"] = render_element(inst.universe(), p.h_top);
        entry["S"] = render_element(inst.universe(), p.s_top);
        pairs.push_back(std::move(entry));
    }
    out["gaugePairs"] = std::move(pairs);

    json counts;
    int sat = 0, jsat = 0, cyclic = 0;
    for (const auto& e : r.lattice) {
        if (e.saturated) ++sat;
        if (e.j_saturated) ++jsat;
    }
    for (const auto& t : r.tails)
        if (t.cyclic) ++cyclic;
    counts["satHereditaryIdeals"] = sat;
    counts["jSaturatedHereditaryIdeals"] = jsat;
    counts["maximalTails"] = static_cast<int>(r.tails.size());
    counts["cyclicMaximalTails"] = cyclic;
    counts["gaugePairs"] = static_cast<int>(r.pairs.size());
    out["counts"] = std::move(counts);

    json graph;
    graph["vertices"] = r.graph.vertex_count;
    graph["edges"] = static_cast<int>(r.graph.edges.size());
    graph["domR"] = r.dom_r;
    graph["loopsWithoutEntrances"] = r.entrance_free_loops;
    out["graph"] = std::move(graph);

    return out.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& r) {
    const Instance& inst = r.instance;
    const AtomUniverse& u = inst.universe();
    std::string out;

    out += "instance: " + std::to_string(inst.atom_count()) + " atoms [";
    for (int a = 0; a < inst.atom_count(); ++a) out += (a ? " " : "") + u.name(a);
    out += "], " + std::to_string(inst.label_count()) + " labels [";
    for (int l = 0; l < inst.label_count(); ++l) out += (l ? " " : "") + inst.label(l);
    out += "]\n";
    if (r.degenerate) out += "degenerate: B = {only the empty element}\n";
    out += "regular top: " + render_element(u, inst.regular_top()) + "\n";
    if (inst.label_count() > 0) {
        out += "ideal tops:";
        for (int l = 0; l < inst.label_count(); ++l)
            out += " " + inst.label(l) + "=" + render_element(u, inst.ideal_top(l));
        out += "\n";
    }
    out += "J top: " + render_element(u, inst.j_top()) + "\n";

    if (r.condition_l) {
        out += "Condition (L): HOLDS\n";
    } else {
        out += "Condition (L): FAILS; cycle word=" + render_word(inst, r.cycle_witness->word) +
               " base=" + u.name(r.cycle_witness->atom) + "\n";
    }
    out += std::string("Condition (K): ") + (r.condition_k ? "HOLDS" : "FAILS");
    if (!r.condition_k) {
        for (const auto& t : r.tails)
            if (t.cyclic) {
                out += "; cyclic tail complement=" + render_element(u, t.complement_top) +
                       " base=" + u.name(t.base_atom) + " beta=" + render_word(inst, t.beta);
                break;
            }
    }
    out += "\n";
    out += std::string("minimal: ") + (r.minimal ? "YES" : "NO") + "\n";
    if (r.simple)
        out += std::string("simple: ") + (*r.simple ? "YES" : "NO") + " (" + r.simple_explanation +
               ")\n";
    else
        out += "simple: REFUSED (" + r.simple_note + ")\n";

    int sat = 0;
    for (const auto& e : r.lattice)
        if (e.saturated) ++sat;
    out += "saturated hereditary ideals (" + std::to_string(sat) + "):";
    for (const auto& e : r.lattice)
        if (e.saturated) out += " " + render_element(u, e.top);
    out += "\n";
    out += "maximal tails (" + std::to_string(r.tails.size()) + "):";
    for (const auto& t : r.tails) {
        out += " complement=" + render_element(u, t.complement_top);
        if (t.cyclic) out += "[cyclic base=" + u.name(t.base_atom) + " beta=" + render_word(inst, t.beta) + "]";
    }
    out += "\n";
    out += "gauge-invariant ideal pairs (" + std::to_string(r.pairs.size()) + "):";
    for (const auto& p : r.pairs)
        out += " (H=" + render_element(u, p.h_top) + ",S=" + render_element(u, p.s_top) + ")";
    out += "\n";
    out += "graph: " + std::to_string(r.graph.vertex_count) + " vertices, " +
           std::to_string(r.graph.edges.size()) + " edges, dom(r)=" + std::to_string(r.dom_r) +
           ", loops without entrances: " + std::to_string(r.entrance_free_loops) + "\n";
    return out;
}

}  // namespace bdsa
