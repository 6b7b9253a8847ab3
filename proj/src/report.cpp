#include "apt/report.hpp"

#include "apt/thresholds.hpp"

namespace apt {

namespace {

nlohmann::json block_counts(const ClassifiedBlocks &cb) {
    nlohmann::json j;
    for (BlockClass c : {BlockClass::Isolated, BlockClass::Leaf, BlockClass::Path, BlockClass::Branching})
        j[to_string(c)] = cb.count(c);
    return j;
}

} // namespace

nlohmann::json run_report(const Instance &inst, const Outcome &outcome, std::optional<double> seconds) {
    nlohmann::json j;
    j["instance"] = {{"n", inst.g.vertex_count()},
                     {"m", inst.g.edge_count()},
                     {"k", to_string(inst.k)},
                     {"property", inst.pi.name}};
    j["outcome"] = outcome.tag();
    j["dispatch"] = outcome.stats.dispatch;
    j["rules"] = {{"rule1", outcome.stats.rule1_applications},
                  {"rule2_identified", outcome.stats.rule2_identified},
                  {"rule2_decremented", outcome.stats.rule2_decremented}};
    if (outcome.stats.modulator_size)
        j["modulator"] = {{"size", *outcome.stats.modulator_size}, {"method", outcome.stats.modulator_method}};

    if (const auto *yes = std::get_if<YesOutcome>(&outcome.value)) {
        const YesWitness &w = yes->witness;
        j["witness"] = {{"lemma", w.lemma},
                        {"detail", w.detail},
                        {"count", to_string(w.count)},
                        {"threshold", to_string(w.threshold)},
                        {"structure", w.structure}};
        if (w.center)
            j["witness"]["center"] = *w.center;
    } else if (const auto *kernel = std::get_if<KernelOutcome>(&outcome.value)) {
        double utilization = kernel->bound > 0 ? static_cast<double>(kernel->g.vertex_count()) /
                                                     static_cast<double>(kernel->bound)
                                               : 0.0;
        j["kernel"] = {{"n", kernel->g.vertex_count()},
                       {"m", kernel->g.edge_count()},
                       {"k", to_string(kernel->k)},
                       {"bound", kernel->bound},
                       {"bound_kind", to_string(kernel->kind)},
                       {"utilization", utilization}};
        if (outcome.stats.blocks)
            j["kernel"]["blocks"] = block_counts(*outcome.stats.blocks);
        if (const auto &p = outcome.stats.partition)
            j["kernel"]["path_blocks"] = {{"plus", p->plus.size()},
                                          {"prime", p->prime.size()},
                                          {"double_prime", p->dprime.size()},
                                          {"triple_prime", p->tprime.size()}};
    } else if (const auto *u = std::get_if<UnsupportedOutcome>(&outcome.value)) {
        j["reason"] = u->reason;
    } else {
        const auto &t = std::get<ModulatorTooLargeOutcome>(outcome.value);
        j["diagnostic"] = {{"size", t.s_size}, {"limit", to_string(t.limit)}, {"message", t.diagnostic}};
    }
    if (seconds)
        j["timings"] = {{"total_seconds", *seconds}};
    return j;
}

nlohmann::json constants_report(const PropertySpec &pi, const PropertyConstants &c, int k_max) {
    nlohmann::json j;
    j["property"] = pi.name;
    j["lambda"] = to_string(c.lambda.value());
    j["j"] = c.j;
    j["a"] = to_string(c.a);
    j["inf_ak"] = to_string(c.inf_ak);
    for (int k = 1; k <= k_max; ++k) {
        nlohmann::json row;
        for (const auto &[name, value] : thresholds(c, k).named())
            row[name] = to_string(value);
        row["quadratic_bound"] = kernel_size_bound(c, k, KernelCase::Quadratic);
        row["cubic_bound"] = kernel_size_bound(c, k, KernelCase::Cubic);
        j["thresholds"][std::to_string(k)] = row;
    }
    return j;
}

nlohmann::json axiom_report_json(const PropertySpec &pi, int n_max, const AxiomReport &report,
                                 const HereditaryReport &hereditary) {
    nlohmann::json j;
    j["property"] = pi.name;
    j["n_max"] = n_max;
    for (const AxiomCheck *check : {&report.inclusiveness, &report.block_additivity, &report.subgraph_extension})
        j["axioms"][check->axiom] = {{"passed", check->passed()},
                                     {"cases", check->cases_checked},
                                     {"counterexamples", check->counterexamples}};
    j["hereditary"] = {{"declared", pi.declared_hereditary}, {"observed", hereditary.hereditary}};
    if (hereditary.counterexample)
        j["hereditary"]["counterexample"] = *hereditary.counterexample;
    return j;
}

} // namespace apt
