#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "bdsa/crosscheck.hpp"
#include "bdsa/instance_io.hpp"
#include "bdsa/report.hpp"
#include "bdsa/relgen.hpp"
#include "json.hpp"

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitCrossCheck = 3;

int exit_code_for(const bdsa::Error& e) {
    switch (e.kind()) {
        case bdsa::ErrorKind::CrossCheckMismatch:
        case bdsa::ErrorKind::InvalidTail:
        case bdsa::ErrorKind::TailAxiomFailure:
            return kExitCrossCheck;
        default:
            return kExitInvalidInput;
    }
}

using bdsa::Instance;

std::string condition_l_line(const Instance& inst) {
    bdsa::LVerdict l = bdsa::check_condition_L(inst);
    if (l.holds) return "Condition (L): HOLDS";
    return "Condition (L): FAILS; cycle word=" + bdsa::render_word(inst, l.witness->word) +
           " base=" + inst.universe().name(l.witness->atom);
}

std::string condition_k_line(const Instance& inst, bool all_routes) {
    bool k = all_routes ? bdsa::check_condition_K_agreed(inst) : bdsa::check_condition_K(inst);
    if (k) return "Condition (K): HOLDS";
    std::string out = "Condition (K): FAILS";
    for (const auto& entry : bdsa::enumerate_lattice(inst, bdsa::LatticeMode::JSaturated)) {
        Instance quotient = bdsa::quotient_instance(inst, bdsa::PrincipalIdeal{entry.top});
        if (auto w = bdsa::find_cycle_no_exit(quotient)) {
            out += "; quotient by top=" + bdsa::render_element(inst.universe(), entry.top) +
                   " has cycle word=" + bdsa::render_word(quotient, w->word) +
                   " base=" + quotient.universe().name(w->atom);
            break;
        }
    }
    return out;
}

std::string minimal_line(const Instance& inst, bool all_routes) {
    bool m = all_routes ? bdsa::is_minimal_agreed(inst) : bdsa::is_minimal(inst);
    if (all_routes && inst.atom_count() <= 5) {
        auto [v4, v5] = bdsa::brute_minimality_45(inst);
        if (v4 != m || v5 != m)
            throw bdsa::Error(bdsa::ErrorKind::CrossCheckMismatch,
                              "minimality covering characterizations disagree with the lattice route");
    }
    if (m) return "minimal: YES";
    for (const auto& e : bdsa::enumerate_lattice(inst, bdsa::LatticeMode::Saturated))
        if (!e.top.empty() && e.top != inst.universe().full())
            return "minimal: NO (saturated hereditary ideal top=" +
                   bdsa::render_element(inst.universe(), e.top) + ")";
    return "minimal: NO";
}

std::string simple_line(const Instance& inst) {
    try {
        bdsa::SimpleVerdict v = bdsa::is_simple(inst);
        return std::string("simple: ") + (v.simple ? "YES" : "NO") + " (" + v.explanation + ")";
    } catch (const bdsa::Error& e) {
        if (e.kind() == bdsa::ErrorKind::RelativeJNotSupported)
            return std::string("simple: REFUSED (") + e.what() + ")";
        throw;
    }
}

int cmd_check(const std::string& path, const std::string& property, const std::string& method) {
    Instance inst = bdsa::parse_instance_file(path);
    bool all = method == "all";
    if (property == "l") {
        std::cout << condition_l_line(inst) << "\n";
        if (all && bdsa::check_condition_L(inst).holds != bdsa::brute_condition_L(inst))
            throw bdsa::Error(bdsa::ErrorKind::CrossCheckMismatch,
                              "Condition (L) disagrees with the literal word search");
    } else if (property == "k") {
        std::cout << condition_k_line(inst, all) << "\n";
    } else if (property == "minimal") {
        std::cout << minimal_line(inst, all) << "\n";
    } else if (property == "simple") {
        std::cout << simple_line(inst) << "\n";
    }
    return 0;
}

int cmd_crosscheck(uint64_t seed, uint64_t count, int threads) {
    std::vector<uint64_t> seeds;
    for (uint64_t s = seed; s < seed + count; ++s) seeds.push_back(s);
    std::vector<bdsa::BatteryResult> results(seeds.size());

    if (threads < 1) threads = 1;
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= seeds.size()) break;
                results[i] = bdsa::run_battery(bdsa::corpus_instance(seeds[i]));
            }
        });
    for (auto& th : pool) th.join();

    int core_failures = 0;
    int transfer_failures = 0;
    for (size_t i = 0; i < seeds.size(); ++i) {
        const auto& r = results[i];
        if (!r.all_core() || !r.l_transfer_verbatim || !r.l_transfer_relative) {
            if (!r.all_core() || !r.l_transfer_relative)
                ++core_failures;
            else
                ++transfer_failures;
            std::cout << "seed " << seeds[i] << ":";
            for (const auto& f : r.failures) std::cout << " [" << f << "]";
            std::cout << "\n";
            std::cout << bdsa::render_instance(bdsa::corpus_instance(seeds[i]));
        }
    }
    std::cout << "crosscheck: " << seeds.size() << " instances, " << core_failures
              << " core disagreements, " << transfer_failures
              << " verbatim-transfer disagreements (see THEORY.md on the transfer law)\n";
    return (core_failures + transfer_failures) > 0 ? kExitCrossCheck : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for finite Boolean dynamical systems"};
    app.require_subcommand(1);

    std::string file, property, method = "main", top_text, dot_path;
    bool json_out = false;
    int threads = 1;
    uint64_t seed = 1, count = 100;
    bdsa::GeneratorParams gen_params;
    double density = 0.5, slack = 0.0, shrink = 0.0;

    auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
    validate->add_option("file", file)->required();

    auto* check = app.add_subcommand("check", "decide one property");
    check->add_option("file", file)->required();
    check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"l", "k", "minimal", "simple"}));
    check->add_option("--method", method)->check(CLI::IsMember({"main", "all"}));

    auto* ideals = app.add_subcommand("ideals", "list the hereditary ideal lattice");
    ideals->add_option("file", file)->required();
    ideals->add_flag("--json", json_out);

    auto* gauge = app.add_subcommand("gauge-ideals", "list the gauge-invariant ideal pairs");
    gauge->add_option("file", file)->required();
    gauge->add_flag("--json", json_out);

    auto* tails = app.add_subcommand("tails", "list the maximal tails");
    tails->add_option("file", file)->required();
    tails->add_flag("--json", json_out);

    auto* graph = app.add_subcommand("graph", "graph statistics or DOT export");
    graph->add_option("file", file)->required();
    graph->add_option("--dot", dot_path, "write DOT to a path ('-' for stdout)");

    auto* quotient = app.add_subcommand("quotient", "quotient by a hereditary ideal");
    quotient->add_option("file", file)->required();
    quotient->add_option("--top", top_text)->required();

    auto* bprime = app.add_subcommand("bprime", "print the pair system of a relative instance");
    bprime->add_option("file", file)->required();

    auto* report = app.add_subcommand("report", "full analysis report");
    report->add_option("file", file)->required();
    report->add_flag("--json", json_out);
    report->add_option("--threads", threads);

    auto* gen = app.add_subcommand("gen", "print a deterministic random instance");
    gen->add_option("--seed", gen_params.seed)->required();
    gen->add_option("--atoms", gen_params.atom_count)->required();
    gen->add_option("--labels", gen_params.label_count)->required();
    gen->add_option("--density", density);
    gen->add_option("--slack", slack);
    gen->add_option("--shrink", shrink);

    auto* crosscheck = app.add_subcommand("crosscheck", "cross-validate a seeded corpus");
    crosscheck->add_option("--seed", seed);
    crosscheck->add_option("--count", count);
    crosscheck->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            bdsa::Instance inst = bdsa::parse_instance_file(file);
            std::cout << "ok: " << inst.atom_count() << " atoms, " << inst.label_count()
                      << " labels, regular top "
                      << bdsa::render_element(inst.universe(), inst.regular_top()) << ", J top "
                      << bdsa::render_element(inst.universe(), inst.j_top()) << "\n";
            return 0;
        }
        if (check->parsed()) return cmd_check(file, property, method);
        if (ideals->parsed() || gauge->parsed() || tails->parsed() || report->parsed()) {
            bdsa::Instance inst = bdsa::parse_instance_file(file);
            bdsa::AnalysisReport r = bdsa::build_report(inst, threads);
            if (json_out && !report->parsed()) {
                auto full = nlohmann::json::parse(bdsa::report_json(r));
                nlohmann::json fragment;
                if (ideals->parsed())
                    fragment["lattice"] = full["lattice"];
                else if (gauge->parsed())
                    fragment["gaugePairs"] = full["gaugePairs"];
                else
                    fragment["maximalTails"] = full["maximalTails"];
                fragment["counts"] = full["counts"];
                std::cout << fragment.dump(2) << "\n";
            } else if (json_out) {
                std::cout << bdsa::report_json(r);
            } else if (report->parsed()) {
                std::cout << bdsa::report_text(r);
            } else if (ideals->parsed()) {
                for (const auto& e : r.lattice)
                    std::cout << bdsa::render_element(inst.universe(), e.top)
                              << (e.saturated ? " saturated" : "")
                              << (e.j_saturated ? " J-saturated" : "") << "\n";
            } else if (gauge->parsed()) {
                for (const auto& p : r.pairs)
                    std::cout << "(H=" << bdsa::render_element(inst.universe(), p.h_top)
                              << ",S=" << bdsa::render_element(inst.universe(), p.s_top) << ")\n";
            } else {
                for (const auto& t : r.tails) {
                    std::cout << "complement=" << bdsa::render_element(inst.universe(), t.complement_top);
                    if (t.cyclic)
                        std::cout << " cyclic base=" << inst.universe().name(t.base_atom)
                                  << " beta=" << bdsa::render_word(inst, t.beta);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (graph->parsed()) {
            bdsa::Instance inst = bdsa::parse_instance_file(file);
            bdsa::TopGraph g = bdsa::build_graph(inst);
            if (!dot_path.empty()) {
                std::string dot = bdsa::to_dot(inst, g);
                if (dot_path == "-") {
                    std::cout << dot;
                } else {
                    std::ofstream out(dot_path);
                    out << dot;
                }
            } else {
                int dom_r = 0;
                for (const auto& e : g.edges)
                    if (e.r >= 0) ++dom_r;
                std::cout << g.vertex_count << " vertices, " << g.edges.size()
                          << " edges, dom(r)=" << dom_r << ", loops without entrances: "
                          << bdsa::loops_without_entrances(g).size() << "\n";
            }
            return 0;
        }
        if (quotient->parsed()) {
            bdsa::Instance inst = bdsa::parse_instance_file(file);
            bdsa::Element top = bdsa::parse_element(inst.universe(), top_text);
            std::cout << bdsa::render_instance(bdsa::quotient_instance(inst, bdsa::PrincipalIdeal{top}));
            return 0;
        }
        if (bprime->parsed()) {
            bdsa::Instance inst = bdsa::parse_instance_file(file);
            bdsa::PrimeInstance prime = bdsa::to_generalized(inst);
            for (size_t i = 0; i < prime.tags.size(); ++i)
                std::cout << "# " << prime.instance.universe().name(static_cast<int>(i)) << " : "
                          << (prime.tags[i].defect ? "defect(" : "pair(")
                          << inst.universe().name(prime.tags[i].base) << ")\n";
            std::cout << bdsa::render_instance(prime.instance);
            return 0;
        }
        if (gen->parsed()) {
            gen_params.density_milli = static_cast<int>(density * 1000 + 0.5);
            gen_params.ideal_slack_milli = static_cast<int>(slack * 1000 + 0.5);
            gen_params.j_shrink_milli = static_cast<int>(shrink * 1000 + 0.5);
            std::cout << bdsa::render_instance(bdsa::random_instance(gen_params));
            return 0;
        }
        if (crosscheck->parsed()) return cmd_crosscheck(seed, count, threads);
    } catch (const bdsa::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
