#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdsa/ideals.hpp"
#include "bdsa/props.hpp"
#include "bdsa/topograph.hpp"

namespace bdsa {

/// Full analysis of one instance. JSON serialization is canonical: keys
/// sorted, elements rendered in declaration order, byte-stable across runs
/// and thread counts.
struct AnalysisReport {
    Instance instance;
    bool degenerate = false;  // one-element algebra

    bool condition_l = false;
    std::optional<CycleWitness> cycle_witness;
    bool condition_k = false;
    bool minimal = false;
    std::optional<bool> simple;  // absent when J is a proper subideal
    std::string simple_note;
    std::string simple_explanation;

    std::vector<LatticeEntry> lattice;
    std::vector<TailDescriptor> tails;
    std::vector<GaugePair> pairs;

    TopGraph graph;
    int dom_r = 0;
    int entrance_free_loops = 0;

    AnalysisReport(Instance inst) : instance(std::move(inst)) {}
};

/// Runs every analysis with route cross-checking (throws CrossCheckMismatch
/// on an internal disagreement). threads > 1 evaluates the independent parts
/// concurrently; the assembled report is identical either way.
AnalysisReport build_report(const Instance& inst, int threads = 1);

std::string report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

}  // namespace bdsa
