#include "apt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "apt/blocks.hpp"
#include "apt/enumerate.hpp"
#include "apt/graph_io.hpp"

namespace apt {

bool solve_apt(const Instance &inst) {
    return excess(inst.g, inst.pi).ex >= inst.k;
}

std::string instance_payload(const Instance &inst) {
    return "# property " + inst.pi.name + "\n# k " + to_string(inst.k) + "\n" + write_graph(inst.g);
}

EquivalenceReport equivalence_check(const Instance &inst, const KernelOptions &options) {
    EquivalenceReport report{"", solve_apt(inst), std::nullopt, kernelize(inst, options)};
    report.outcome = report.detail.tag();
    if (report.detail.is_yes() && !report.oracle_answer)
        throw ContractViolation("kernelizer answered YES (" +
                                    std::get<YesOutcome>(report.detail.value).witness.lemma +
                                    ") on a NO instance",
                                instance_payload(inst));
    if (const auto *kernel = std::get_if<KernelOutcome>(&report.detail.value)) {
        report.kernel_answer = kernel->k <= 0 || solve_apt(Instance{kernel->g, kernel->k, inst.pi});
        if (*report.kernel_answer != report.oracle_answer)
            throw ContractViolation(std::string("kernel answer ") + (*report.kernel_answer ? "YES" : "NO") +
                                        " differs from the input answer " + (report.oracle_answer ? "YES" : "NO"),
                                    instance_payload(inst) + "# kernel k " + to_string(kernel->k) + "\n" +
                                        write_graph(kernel->g));
    }
    return report;
}

Graph shrink(const Graph &g, const std::function<bool(const Graph &)> &still_fails) {
    Graph current = g;
    bool progress = true;
    while (progress && current.vertex_count() > 1) {
        progress = false;
        for (Vertex v = 0; v < current.vertex_count(); ++v) {
            Vertex gone[] = {v};
            Graph smaller = delete_vertices(current, gone);
            if (!smaller.is_connected())
                continue;
            bool fails = false;
            try {
                fails = still_fails(smaller);
            } catch (const std::exception &) {
                fails = false;
            }
            if (fails) {
                current = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return current;
}

Rational brute_excess(const Graph &g, const PropertySpec &pi) {
    return ms_by_subsets(g, pi, 30) - pt(g, pi.lambda);
}

namespace {

constexpr std::size_t kMaxReported = 5;

void report(LemmaResult &r, const Graph &g, const std::function<bool(const Graph &)> &fails,
            const std::string &note) {
    if (r.counterexamples.size() >= kMaxReported)
        return;
    r.counterexamples.push_back(note + " [" + shrink(g, fails).encode() + "]");
}

// Two random connected pieces glued at one vertex, so cut vertices always exist.
Graph glued_instance(const PropertySpec &pi, int n_max, Rng &rng) {
    int total = rng.between(3, n_max);
    int left = rng.between(2, total - 1);
    int right = total - left + 1;
    Graph a = random_connected_gnp(left, 0.5, rng);
    Graph b = random_connected_gnp(right, 0.5, rng);
    Graph h(total);
    for (const Edge &e : a.edges())
        h.add_edge(e.u, e.v);
    // b's vertex 0 is a's last vertex.
    auto id = [&](Vertex x) { return x == 0 ? left - 1 : left + x - 1; };
    for (const Edge &e : b.edges())
        h.add_edge(id(e.u), id(e.v));
    return decorate(h, pi.graph_class, VariantPolicy{0.0, true, false}, rng);
}

std::vector<Graph> half_lemma_graphs(const PropertySpec &pi, const LemmaSuiteConfig &config, Rng &rng) {
    std::vector<Graph> out;
    const bool simple = pi.graph_class.kind == ClassKind::Simple;
    for (int n = 1; n <= config.half_n_max; ++n) {
        for (const Graph &h : connected_graphs_of_order(n)) {
            if (simple) {
                out.push_back(h);
            } else if (n <= config.half_variant_n_max) {
                for_each_variant(h, pi.graph_class, [&](const Graph &g) {
                    out.push_back(g);
                    return true;
                });
            } else {
                out.push_back(decorate(h, pi.graph_class, VariantPolicy{0.0, true, false}, rng));
            }
        }
    }
    return out;
}

} // namespace

LemmaResult check_cutvertex_additivity(const PropertySpec &pi, const LemmaSuiteConfig &config) {
    LemmaResult r{"cut-vertex additivity", 0, {}};
    Rng rng(config.seed);
    for (int i = 0; i < config.cutvertex_instances; ++i) {
        Graph g = glued_instance(pi, config.cutvertex_n_max, rng);
        const Rational whole = brute_excess(g, pi);
        for (Vertex v : block_decomposition(g).cut_vertices) {
            ++r.cases;
            auto fails = [&pi](const Graph &h) {
                Rational total = brute_excess(h, pi);
                for (Vertex c : block_decomposition(h).cut_vertices) {
                    Vertex gone[] = {c};
                    std::vector<Vertex> map;
                    Graph rest = delete_vertices(h, gone, &map);
                    int count = 0;
                    auto comp = rest.component_ids(&count);
                    Rational sum = 0;
                    for (int part = 0; part < count; ++part) {
                        std::vector<Vertex> vs{c};
                        for (Vertex x = 0; x < h.vertex_count(); ++x)
                            if (map[x] >= 0 && comp[map[x]] == part)
                                vs.push_back(x);
                        sum += brute_excess(induced_subgraph(h, vs), pi);
                    }
                    if (sum != total)
                        return true;
                }
                return false;
            };
            Vertex gone[] = {v};
            std::vector<Vertex> map;
            Graph rest = delete_vertices(g, gone, &map);
            int count = 0;
            auto comp = rest.component_ids(&count);
            Rational sum = 0;
            for (int part = 0; part < count; ++part) {
                std::vector<Vertex> vs{v};
                for (Vertex x = 0; x < g.vertex_count(); ++x)
                    if (map[x] >= 0 && comp[map[x]] == part)
                        vs.push_back(x);
                sum += brute_excess(induced_subgraph(g, vs), pi);
            }
            if (sum != whole)
                report(r, g, fails, "ex(G) = " + to_string(whole) + " but the parts at " + std::to_string(v) +
                                        " sum to " + to_string(sum));
        }
    }
    return r;
}

LemmaResult check_half_lemma(const PropertySpec &pi, const LemmaSuiteConfig &config) {
    LemmaResult r{"half lemma", 0, {}};
    Rng rng(config.seed + 1);
    const Rational h = pi.lambda.half_complement();
    auto violated = [&](const Graph &g) -> std::optional<std::string> {
        const int n = g.vertex_count();
        const Rational whole = excess(g, pi).ex;
        for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); mask += 2) {
            std::vector<Vertex> v1, v2;
            for (Vertex v = 0; v < n; ++v)
                ((mask >> v) & 1 ? v1 : v2).push_back(v);
            Graph g1 = induced_subgraph(g, v1), g2 = induced_subgraph(g, v2);
            Rational rhs = excess(g1, pi).ex + excess(g2, pi).ex - h * (g1.component_count() + g2.component_count() - 1);
            if (whole < rhs)
                return "mask " + std::to_string(mask) + ": ex(G) = " + to_string(whole) + " < " + to_string(rhs);
        }
        return std::nullopt;
    };
    for (const Graph &g : half_lemma_graphs(pi, config, rng)) {
        if (g.vertex_count() < 2)
            continue;
        r.cases += (std::int64_t{1} << (g.vertex_count() - 1)) - 1;
        if (auto why = violated(g))
            report(r, g, [&](const Graph &x) { return x.vertex_count() >= 2 && violated(x).has_value(); }, *why);
    }
    return r;
}

LemmaResult check_almost_clique_floor(const PropertySpec &pi) {
    LemmaResult r{"almost-clique floor", 0, {}};
    const int cap = default_clique_cap(pi.graph_class);
    const Rational h = pi.lambda.half_complement();
    for (int j = 1; j <= cap; ++j) {
        Rational a = ex_clique(j, pi, cap);
        if (a < h)
            continue;
        for (int t = j + 1; t <= cap; ++t)
            for (const Graph &shape : connected_almost_cliques(t))
                for_each_variant(shape, pi.graph_class, [&](const Graph &g) {
                    ++r.cases;
                    Rational ex = excess(g, pi).ex;
                    if (ex < a - h && r.counterexamples.size() < kMaxReported)
                        r.counterexamples.push_back("ex(K_" + std::to_string(j) + ") = " + to_string(a) + " but " +
                                                    g.encode() + " has ex " + to_string(ex));
                    return true;
                });
    }
    return r;
}

LemmaResult check_clique_growth(const PropertySpec &pi) {
    LemmaResult r{"clique growth", 0, {}};
    auto witness = divergence_witness(pi);
    if (!witness)
        return r;
    const int cap = default_clique_cap(pi.graph_class);
    const Rational h = pi.lambda.half_complement();
    for (int rr = 1; rr * witness->j <= cap; ++rr) {
        ++r.cases;
        Rational ex = ex_clique(rr * witness->j, pi, cap);
        Rational floor_value = h + rr * witness->a;
        if (ex < floor_value)
            r.counterexamples.push_back("ex(K_" + std::to_string(rr * witness->j) + ") = " + to_string(ex) + " < " +
                                        to_string(floor_value));
    }
    return r;
}

LemmaResult check_nonleaf_blocks(const PropertySpec &pi, const LemmaSuiteConfig &config) {
    LemmaResult r{"|B>=3| <= 3|B1|", 0, {}};
    Rng rng(config.seed + 2);
    for (int i = 0; i < config.forest_instances; ++i) {
        ForestOfCliquesPlusS family{random_clique_sizes(rng.between(1, 12), 1, 4, rng), rng.between(0, 3), 0.3};
        PlantedInstance inst = forest_of_cliques_plus_s(family, pi.graph_class, VariantPolicy{}, rng);
        ++r.cases;
        ClassifiedBlocks cb = classify_blocks(inst.g, inst.planted_s);
        int b3 = cb.count(BlockClass::Branching), b1 = cb.count(BlockClass::Leaf);
        if (b3 > 3 * b1 && r.counterexamples.size() < kMaxReported)
            r.counterexamples.push_back(std::to_string(b3) + " branching blocks against " + std::to_string(b1) +
                                        " leaves [" + inst.g.encode() + "]");
    }
    return r;
}

LemmaResult check_oriented_triangle_lemmas(const PropertySpec &pi) {
    LemmaResult r{"oriented triangle lemmas", 0, {}};
    if (pi.graph_class.kind != ClassKind::Oriented || !pi.lambda.is_half() || !pi.declared_hereditary)
        return r;
    TriangleReport tri = triangle_membership(pi);
    ++r.cases;
    if (tri.cyclic_member() && !tri.transitive_member())
        r.counterexamples.push_back("cyclic triangle in the property but transitive triangle not");
    if (tri.transitive_member()) {
        ++r.cases;
        Rational ex4 = ex_clique(4, pi);
        if (ex4 <= Rational(1, 4))
            r.counterexamples.push_back("transitive triangle in the property but ex(K_4) = " + to_string(ex4));
    }
    if (tri.transitive_member() && !tri.cyclic_member()) {
        const int cap = default_clique_cap(pi.graph_class);
        for (int j = 2; j <= cap; ++j) {
            if (j == 3)
                continue;
            ++r.cases;
            Rational ex = ex_clique(j, pi, cap);
            if (ex <= 0)
                r.counterexamples.push_back("ex(K_" + std::to_string(j) + ") = " + to_string(ex));
        }
    }
    return r;
}

LemmaResult check_positive_cliques(const PropertySpec &pi) {
    LemmaResult r{"positive cliques", 0, {}};
    if (pi.lambda.is_half() && triangle_membership(pi).membership != TriangleMembership::All)
        return r;
    const int cap = default_clique_cap(pi.graph_class);
    for (int i = 2; i <= cap; ++i) {
        ++r.cases;
        Rational ex = ex_clique(i, pi, cap);
        if (ex <= 0)
            r.counterexamples.push_back("ex(K_" + std::to_string(i) + ") = " + to_string(ex));
    }
    return r;
}

LemmaResult check_poljak_turzik(const PropertySpec &pi, int n_simple, int n_variants) {
    LemmaResult r{"Poljak-Turzik bound", 0, {}};
    auto below = [&](const Graph &g) { return ms(g, pi) < pt(g, pi.lambda); };
    auto test = [&](const Graph &g) {
        ++r.cases;
        if (below(g))
            report(r, g, below, "ms < pt");
    };
    if (pi.graph_class.kind == ClassKind::Simple) {
        for (const Graph &g : all_connected_graphs(n_simple))
            test(g);
    } else {
        for (const Graph &h : all_connected_graphs(n_variants))
            for_each_variant(h, pi.graph_class, [&](const Graph &g) {
                test(g);
                return true;
            });
    }
    return r;
}

std::vector<LemmaResult> lemma_suite(const PropertySpec &pi, const LemmaSuiteConfig &config) {
    std::vector<LemmaResult> out;
    out.push_back(check_cutvertex_additivity(pi, config));
    out.push_back(check_half_lemma(pi, config));
    out.push_back(check_almost_clique_floor(pi));
    out.push_back(check_clique_growth(pi));
    out.push_back(check_nonleaf_blocks(pi, config));
    out.push_back(check_oriented_triangle_lemmas(pi));
    out.push_back(check_positive_cliques(pi));
    return out;
}

namespace {

// Acyclically oriented tree of cliques on `n` vertices (sizes 2..3) with ids offset by `base`.
void add_tree_of_cliques(Graph &g, int base, int n, Rng &rng) {
    int placed = 1;
    while (placed < n) {
        int size = std::min(rng.between(2, 3), n - placed + 1);
        Vertex anchor = base + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(placed)));
        std::vector<Vertex> members{anchor};
        for (int i = 1; i < size; ++i)
            members.push_back(base + placed++);
        // Lower id first keeps every arc pointing up, so the tree is acyclic.
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                g.add_edge(std::min(members[a], members[b]), std::max(members[a], members[b]));
    }
}

// A vertex of [base, base + n) lying in exactly one block of the forest part.
Vertex single_block_vertex(const Graph &g, int base, int n, Rng &rng) {
    std::vector<Vertex> part(n);
    std::iota(part.begin(), part.end(), base);
    Graph sub = induced_subgraph(g, part);
    BlockDecomposition bd = block_decomposition(sub);
    std::vector<Vertex> options;
    for (Vertex v = 0; v < n; ++v)
        if (!bd.is_cut_vertex(v))
            options.push_back(base + v);
    return options[rng.below(options.size())];
}

} // namespace

RuleInstance rule1_pattern(std::uint64_t seed, int n_max) {
    Rng rng(seed);
    const int triangles = rng.between(1, 2);
    const int s_size = rng.between(0, 2);
    const int forest_n = std::max(2, rng.between(3, n_max - 2 * triangles - s_size));
    const int n = forest_n + 2 * triangles + s_size;
    Graph g(n, GraphClass::oriented());
    add_tree_of_cliques(g, 0, forest_n, rng);
    int next = forest_n;
    for (int t = 0; t < triangles; ++t) {
        Vertex root = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(forest_n)));
        Vertex a = next++, b = next++;
        g.add_arc(root, a);
        g.add_arc(a, b);
        g.add_arc(b, root);
    }
    std::vector<Vertex> s;
    for (int i = 0; i < s_size; ++i) {
        Vertex x = next++;
        s.push_back(x);
        int edges = 0;
        for (Vertex v = 0; v < forest_n; ++v)
            if (rng.chance(0.3)) {
                rng.chance(0.5) ? g.add_arc(v, x) : g.add_arc(x, v);
                ++edges;
            }
        if (edges == 0)
            g.add_arc(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(forest_n))), x);
    }
    return RuleInstance{g, s};
}

RuleInstance rule2_pattern(std::uint64_t seed, int n_max, bool split) {
    Rng rng(seed);
    const int s_size = rng.between(split ? 0 : 1, 2);
    const int budget = std::max(4, n_max - 3 - s_size);
    const int left_n = rng.between(2, budget - 2);
    const int right_n = std::max(2, std::min(budget - left_n, rng.between(2, budget - left_n)));
    const int n = left_n + right_n + 3 + s_size;
    Graph g(n, GraphClass::oriented());
    add_tree_of_cliques(g, 0, left_n, rng);
    add_tree_of_cliques(g, left_n, right_n, rng);
    Vertex u1 = single_block_vertex(g, 0, left_n, rng);
    Vertex u2 = single_block_vertex(g, left_n, right_n, rng);
    Vertex v = left_n + right_n, w1 = v + 1, w2 = v + 2;
    g.add_arc(u1, w1);
    g.add_arc(w1, v);
    g.add_arc(v, u1);
    g.add_arc(v, w2);
    g.add_arc(w2, u2);
    g.add_arc(u2, v);

    std::vector<Vertex> s;
    for (int i = 0; i < s_size; ++i) {
        Vertex x = v + 3 + i;
        s.push_back(x);
        // In the split case each S-vertex stays on one side; otherwise the first one bridges.
        bool bridge = !split && i == 0;
        int side = static_cast<int>(rng.below(2));
        auto attach = [&](int base, int count) {
            int edges = 0;
            for (Vertex y = base; y < base + count; ++y)
                if (rng.chance(0.4)) {
                    rng.chance(0.5) ? g.add_arc(y, x) : g.add_arc(x, y);
                    ++edges;
                }
            if (edges == 0)
                g.add_arc(base + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(count))), x);
        };
        if (bridge || side == 0)
            attach(0, left_n);
        if (bridge || side == 1)
            attach(left_n, right_n);
    }
    return RuleInstance{g, s};
}

RuleValidityReport rule_validity_suite(std::uint64_t seed, int instances, int n_max) {
    RuleValidityReport rep;
    const PropertySpec pi = acyclic_oriented_property();
    const PropertyConstants c = property_constants(pi);
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        if (i % 2 == 0) {
            RuleInstance ri = rule1_pattern(s, n_max);
            ReductionState state{ri.g, 1, ri.s};
            Rational before = brute_excess(ri.g, pi);
            int applied = apply_rule1(state, pi, c);
            Rational after = brute_excess(state.g, pi);
            ++rep.rule1_instances;
            rep.rule1_applications += applied;
            if (applied == 0 || before != after || !state.g.is_connected())
                rep.counterexamples.push_back("rule 1 seed " + std::to_string(s) + ": " + to_string(before) + " -> " +
                                              to_string(after) + " after " + std::to_string(applied) +
                                              " applications [" + ri.g.encode() + "]");
        } else {
            const bool split = (i / 2) % 2 == 0;
            RuleInstance ri = rule2_pattern(s, n_max, split);
            auto m = find_rule2(ri.g, ri.s);
            ++rep.rule2_instances;
            if (!m) {
                rep.counterexamples.push_back("rule 2 seed " + std::to_string(s) + ": planted pattern not found [" +
                                              ri.g.encode() + "]");
                continue;
            }
            ReductionState state{ri.g, 1, ri.s};
            Rational before = brute_excess(ri.g, pi);
            Rule2Kind kind = apply_rule2(state, *m);
            Rational after = brute_excess(state.g, pi);
            Rational expected = kind == Rule2Kind::Identified ? before : before - Rational(1, 4);
            (kind == Rule2Kind::Identified ? rep.rule2_identified : rep.rule2_decremented)++;
            Vertex only_v[] = {m->v};
            bool splits = !delete_vertices(ri.g, only_v).is_connected();
            if (after != expected || splits != (kind == Rule2Kind::Identified) || !state.g.is_connected())
                rep.counterexamples.push_back("rule 2 seed " + std::to_string(s) + ": " + to_string(before) + " -> " +
                                              to_string(after) + " [" + ri.g.encode() + "]");
        }
    }
    return rep;
}

} // namespace apt

namespace apt {

Instance corpus_instance(const PropertySpec &pi, std::uint64_t seed, const Rational &k) {
    Rng rng(seed);
    ForestOfCliquesPlusS family{random_clique_sizes(rng.between(2, 6), 1, 4, rng), rng.between(0, 2), 0.3};
    VariantPolicy policy;
    policy.cyclic_bias = 0.5;
    PlantedInstance planted = forest_of_cliques_plus_s(family, pi.graph_class, policy, rng);
    return Instance{planted.g, k, pi};
}

} // namespace apt
