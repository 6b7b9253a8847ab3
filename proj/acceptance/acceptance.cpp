// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-apt-kernel> <test-data-dir>

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "apt/axioms.hpp"
#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"
#include "apt/excess.hpp"
#include "apt/generators.hpp"
#include "apt/kernelizer.hpp"
#include "apt/modulator.hpp"
#include "apt/oracle.hpp"

using namespace apt;

namespace {

// Pinned sizes and tolerances. Every comparison below is exact rational arithmetic,
// so the tolerance on excess values is zero.
constexpr int kPtSimpleN = 7;
constexpr int kPtVariantN = 5;
constexpr int kPtRandomOrientations = 4;  // extra orientations per simple graph on 6..7 vertices
constexpr int kRuleInstances = 300;
constexpr int kRuleNMax = 12;
constexpr int kCorpusSeeds = 1000;
constexpr int kBipartiteN = 6;
constexpr int kModulatorN = 8;

struct Verdict {
    bool pass = true;
    std::ostringstream note;
    void fail(const std::string &why) {
        if (pass)
            note << why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string &title, Verdict &v, double seconds) {
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
                v.note.str().empty() ? "" : " -- ", v.note.str().c_str());
    std::fflush(stdout);
    failures += !v.pass;
}

void run(int id, const std::string &title, const std::function<void(Verdict &)> &body) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        body(v);
    } catch (const std::exception &e) {
        v.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, title, v, s);
}

void parallel_for(int count, const std::function<void(int)> &body) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++)
                body(i);
        });
    for (auto &t : pool)
        t.join();
}

std::vector<PropertySpec> built_ins() {
    return {bipartite_property(), q_colorable_property(3), q_colorable_property(4), acyclic_oriented_property()};
}

void criterion1(Verdict &v) {
    long long cases = 0;
    for (const PropertySpec &pi : built_ins()) {
        LemmaResult r = check_poljak_turzik(pi, kPtSimpleN, kPtVariantN);
        cases += r.cases;
        if (!r.passed())
            v.fail(pi.name + ": " + r.counterexamples.front());
    }
    // The oriented property also sees every simple graph up to 7 vertices, under the
    // vertex-order orientation and a few random ones.
    const PropertySpec acyc = acyclic_oriented_property();
    Rng rng(2024);
    for (const Graph &h : all_connected_graphs(kPtSimpleN)) {
        if (h.vertex_count() <= kPtVariantN)
            continue;
        for (int t = 0; t <= kPtRandomOrientations; ++t) {
            VariantPolicy policy;
            policy.uniform = t > 0;
            Graph g = t == 0 ? decorate(h, GraphClass::oriented(), VariantPolicy{}, rng)
                             : decorate(h, GraphClass::oriented(), policy, rng);
            ++cases;
            if (ms(g, acyc) < pt(g, acyc.lambda))
                v.fail("acyclic-oriented below pt on " + g.encode());
        }
    }
    v.note << cases << " graphs";
}

void criterion2(Verdict &v) {
    for (int q = 3; q <= 5; ++q) {
        PropertySpec pi = q_colorable_property(q);
        if (ex_clique(3, pi) != 2 - 2 * pi.lambda.value())
            v.fail(pi.name + ": ex(K3) = " + to_string(ex_clique(3, pi)));
    }
    for (const PropertySpec &pi : built_ins())
        if (ex_clique(2, pi) != pi.lambda.half_complement())
            v.fail(pi.name + ": ex(K2) = " + to_string(ex_clique(2, pi)));
    const PropertySpec acyc = acyclic_oriented_property();
    if (ex_clique(3, acyc) != 0)
        v.fail("acyclic ex_clique(3) = " + to_string(ex_clique(3, acyc)));
    if (ex_clique(4, acyc) != Rational(5, 4))
        v.fail("acyclic ex_clique(4) = " + to_string(ex_clique(4, acyc)));
}

void criterion3(Verdict &v) {
    long long cases = 0;
    for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3), acyclic_oriented_property()})
        for (const LemmaResult &r : lemma_suite(pi, LemmaSuiteConfig{})) {
            cases += r.cases;
            if (!r.passed())
                v.fail(pi.name + " / " + r.name + ": " + r.counterexamples.front());
        }
    v.note << cases << " cases";
}

void criterion4(Verdict &v) {
    RuleValidityReport r = rule_validity_suite(11, kRuleInstances, kRuleNMax);
    if (!r.counterexamples.empty())
        v.fail(r.counterexamples.front());
    if (r.rule1_applications == 0 || r.rule2_identified == 0 || r.rule2_decremented == 0)
        v.fail("a rule case was never exercised");
    v.note << "rule 1: " << r.rule1_applications << " applications on " << r.rule1_instances
           << " instances; rule 2: " << r.rule2_identified << " identified, " << r.rule2_decremented
           << " decremented on " << r.rule2_instances << " instances";
}

struct CorpusTally {
    long long runs = 0, yes = 0, kernels = 0, oracle_yes = 0;
    long long contract = 0, bound = 0, partition = 0, other = 0;
    std::string first_contract, first_bound, first_partition, first_other;
};

CorpusTally corpus;

void run_corpus() {
    const std::vector<PropertySpec> props{q_colorable_property(3), q_colorable_property(4),
                                          acyclic_oriented_property()};
    std::mutex mu;
    for (const PropertySpec &pi : props) {
        KernelOptions opts{property_constants(pi)};
        const PropertyConstants &c = *opts.constants;
        parallel_for(kCorpusSeeds * 3, [&](int i) {
            std::uint64_t seed = static_cast<std::uint64_t>(i / 3 + 1);
            Rational k = i % 3 + 1;
            Instance inst = corpus_instance(pi, seed, k);
            CorpusTally local;
            local.runs = 1;
            try {
                EquivalenceReport r = equivalence_check(inst, opts);
                local.oracle_yes = r.oracle_answer;
                local.yes = r.detail.is_yes();
                if (const auto *kern = std::get_if<KernelOutcome>(&r.detail.value)) {
                    local.kernels = 1;
                    if (kern->kind == KernelCase::Cubic && r.detail.stats.partition && r.detail.stats.blocks) {
                        const B2Partition &p = *r.detail.stats.partition;
                        const ClassifiedBlocks &cb = *r.detail.stats.blocks;
                        CubicTerms ct = cubic_terms(c, kern->k);
                        Rational nonpath = cb.count(BlockClass::Isolated) + cb.count(BlockClass::Leaf) +
                                           cb.count(BlockClass::Branching);
                        auto sz = [](const std::vector<int> &x) { return Rational(static_cast<std::int64_t>(x.size())); };
                        bool ok = nonpath <= ct.nonpath && sz(p.plus) <= ct.b2plus && sz(p.prime) <= ct.b2prime &&
                                  sz(p.dprime) <= ct.b2dp && sz(p.tprime) <= ct.b2tp &&
                                  Rational(cb.decomposition.block_count()) <= ct.blocks;
                        if (!ok) {
                            local.partition = 1;
                            local.first_partition = instance_payload(inst);
                        }
                    }
                }
            } catch (const ContractViolation &e) {
                local.contract = 1;
                local.first_contract = std::string(e.what()) + "\n" + e.payload();
            } catch (const BoundViolation &e) {
                local.bound = 1;
                local.first_bound = std::string(e.what()) + "\n" + instance_payload(inst);
            } catch (const std::exception &e) {
                local.other = 1;
                local.first_other = std::string(e.what()) + "\n" + instance_payload(inst);
            }
            std::lock_guard lock(mu);
            corpus.runs += local.runs;
            corpus.yes += local.yes;
            corpus.kernels += local.kernels;
            corpus.oracle_yes += local.oracle_yes;
            auto keep = [](long long &n, std::string &first, long long add, const std::string &text) {
                if (add && (first.empty() || text < first))
                    first = text;  // smallest payload, so the report does not depend on thread timing
                n += add;
            };
            keep(corpus.contract, corpus.first_contract, local.contract, local.first_contract);
            keep(corpus.bound, corpus.first_bound, local.bound, local.first_bound);
            keep(corpus.partition, corpus.first_partition, local.partition, local.first_partition);
            keep(corpus.other, corpus.first_other, local.other, local.first_other);
        });
    }
}

void criterion5(Verdict &v) {
    run_corpus();
    if (corpus.contract)
        v.fail(std::to_string(corpus.contract) + " contract violations, first:\n" + corpus.first_contract);
    if (corpus.other)
        v.fail(std::to_string(corpus.other) + " runs failed, first:\n" + corpus.first_other);
    v.note << corpus.runs << " runs, " << corpus.yes << " yes, " << corpus.kernels << " kernels, "
           << corpus.oracle_yes << " oracle-yes";
}

void criterion6(Verdict &v) {
    if (corpus.runs == 0)
        v.fail("corpus was not run");
    if (corpus.bound)
        v.fail(std::to_string(corpus.bound) + " bound violations, first:\n" + corpus.first_bound);
    if (corpus.partition)
        v.fail(std::to_string(corpus.partition) + " partition inequality failures, first:\n" +
               corpus.first_partition);
    v.note << corpus.kernels << " kernels checked";
}

void criterion7(Verdict &v) {
    for (const PropertySpec &pi : {bipartite_property(), q_colorable_property(3), acyclic_oriented_property()}) {
        AxiomReport r = check_axioms(pi, default_axiom_n_max(pi.graph_class));
        for (const AxiomCheck *a : {&r.inclusiveness, &r.block_additivity, &r.subgraph_extension})
            if (!a->passed())
                v.fail(pi.name + " / " + a->axiom + ": " + a->counterexamples.front());
    }
    if (triangle_membership(q_colorable_property(3)).membership != TriangleMembership::All)
        v.fail("qcol:3 triangles not All");
    if (triangle_membership(bipartite_property()).membership != TriangleMembership::None)
        v.fail("bipartite triangles not None");
    if (triangle_membership(acyclic_oriented_property()).membership != TriangleMembership::Partial)
        v.fail("acyclic-oriented triangles not Partial");
}

// Two-colouring by search, independent of the library's bipartiteness test.
bool two_colourable(const Graph &g) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Edge &e : g.edges())
            if (((mask >> e.u) & 1) == ((mask >> e.v) & 1))
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

void criterion8(Verdict &v, const std::string &cli, const std::string &data) {
    const PropertySpec pi = bipartite_property();
    long long graphs = 0;
    for (const Graph &g : all_connected_graphs(kBipartiteN)) {
        ++graphs;
        if (pi.contains(g) != two_colourable(g))
            v.fail("membership differs on " + g.encode());
    }
    if (dispatch_case(pi) != DispatchCase::MaxCutDelegate)
        v.fail("bipartite does not dispatch to the delegate");
    Outcome o = kernelize(Instance{complete_graph(3), 1, pi});
    const auto *u = std::get_if<UnsupportedOutcome>(&o.value);
    if (!u || u->reason.rfind("delegate", 0) != 0)
        v.fail("kernelize did not return Unsupported(delegate)");
    std::string cmd = "\"" + cli + "\" kernelize --graph \"" + data + "/k3.g\" --property bipartite --k 1 > /dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 20)
        v.fail("CLI exit code " + std::to_string(code) + ", expected 20");
    v.note << graphs << " graphs, CLI exit " << code;
}

// Smallest modulator by subset search, written independently of the library's search.
int brute_min_modulator(const Graph &g) {
    const int n = g.vertex_count();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best)
            continue;
        std::vector<Vertex> gone;
        for (Vertex x = 0; x < n; ++x)
            if ((mask >> x) & 1)
                gone.push_back(x);
        Graph rest = delete_vertices(g, gone);
        // Forest of cliques: every cycle-free condition is checked via blocks being cliques.
        bool ok = true;
        for (const auto &block : block_decomposition(rest).blocks)
            if (!is_clique(induced_subgraph(rest, block)))
                ok = false;
        if (ok)
            best = size;
    }
    return best;
}

void criterion9(Verdict &v) {
    std::vector<Graph> graphs = all_connected_graphs(kModulatorN);
    std::atomic<long long> mismatches{0}, invalid{0};
    std::mutex mu;
    std::string first;
    parallel_for(static_cast<int>(graphs.size()), [&](int i) {
        const Graph &g = graphs[i];
        auto m = exact_modulator(g);
        Modulator greedy = greedy_modulator(g);
        std::string why;
        if (!m || !is_forest_of_cliques(delete_vertices(g, m->s)) ||
            !is_forest_of_cliques(delete_vertices(g, greedy.s))) {
            ++invalid;
            why = "invalid modulator on " + g.encode();
        } else if (static_cast<int>(m->s.size()) != brute_min_modulator(g)) {
            ++mismatches;
            why = "non-minimum modulator on " + g.encode();
        }
        if (!why.empty()) {
            std::lock_guard lock(mu);
            if (first.empty() || why < first)
                first = why;
        }
    });
    if (!first.empty())
        v.fail(std::to_string(mismatches.load()) + " non-minimum, " + std::to_string(invalid.load()) +
               " invalid; " + first);
    v.note << graphs.size() << " graphs";
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <apt-kernel> <test-data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1], data = argv[2];
    run(1, "Poljak-Turzik bound on small graphs", criterion1);
    run(2, "exact excess identities", criterion2);
    run(3, "lemma suite", criterion3);
    run(4, "reduction rule validity", criterion4);
    run(5, "end-to-end equivalence with brute force", criterion5);
    run(6, "kernel bounds respected", criterion6);
    run(7, "axiom checker and triangle membership", criterion7);
    run(8, "bipartite membership and delegate dispatch", [&](Verdict &v) { criterion8(v, cli, data); });
    run(9, "exact modulator minimality", criterion9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
