#include "apt/kernelizer.hpp"

#include <algorithm>
#include <numeric>

namespace apt {

void validate_instance(const Instance &inst) {
    if (!(inst.g.graph_class() == inst.pi.graph_class))
        throw std::invalid_argument("graph class " + to_string(inst.g.graph_class()) +
                                    " does not match property class " + to_string(inst.pi.graph_class));
    if (inst.g.vertex_count() == 0 || !inst.g.is_connected())
        throw std::invalid_argument("instance graph must be non-empty and connected");
    if (4 % inst.k.denominator() != 0)
        throw std::invalid_argument("k must have a denominator dividing 4, got " + to_string(inst.k));
}

const char *to_string(DispatchCase c) {
    switch (c) {
    case DispatchCase::Quadratic:
        return "quadratic";
    case DispatchCase::MaxCutDelegate:
        return "maxcut-delegate";
    case DispatchCase::OrientedCubic:
        return "oriented-cubic";
    case DispatchCase::Outside:
        return "outside";
    }
    return "?";
}

DispatchCase dispatch_case(const PropertySpec &pi) {
    TriangleReport tri = triangle_membership(pi);
    if (!pi.lambda.is_half() || tri.membership == TriangleMembership::All)
        return DispatchCase::Quadratic;
    const ClassKind kind = pi.graph_class.kind;
    if (kind == ClassKind::Labelled || !pi.declared_hereditary)
        return DispatchCase::Outside;
    if (tri.membership == TriangleMembership::None)
        return DispatchCase::MaxCutDelegate;
    if (kind == ClassKind::Oriented && tri.transitive_member() && !tri.cyclic_member())
        return DispatchCase::OrientedCubic;
    return DispatchCase::Outside;
}

bool zero_excess_almost_clique(const Graph &g, std::span<const Vertex> vertices, const PropertySpec &pi,
                               const PropertyConstants &c) {
    if (static_cast<int>(vertices.size()) >= c.j + 1)
        return false;
    return excess(induced_subgraph(g, vertices), pi).ex == 0;
}

namespace {

std::vector<Vertex> remap(std::span<const Vertex> vs, const std::vector<Vertex> &old_to_new) {
    std::vector<Vertex> out;
    for (Vertex v : vs)
        if (old_to_new[v] >= 0)
            out.push_back(old_to_new[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void assert_modulator(const ReductionState &state, const char *after) {
    if (!is_forest_of_cliques(delete_vertices(state.g, state.s)))
        throw std::logic_error(std::string("modulator lost the forest-of-cliques property after ") + after);
}

} // namespace

int apply_rule1(ReductionState &state, const PropertySpec &pi, const PropertyConstants &c) {
    int applications = 0;
    while (block_decomposition(state.g).block_count() >= 2) {
        std::optional<DanglingComponent> target;
        for (const DanglingComponent &dc : dangling_components(state.g)) {
            if (zero_excess_almost_clique(state.g, dc.vertices(), pi, c)) {
                target = dc;
                break;
            }
        }
        if (!target)
            break;
        std::vector<Vertex> old_to_new;
        state.g = delete_vertices(state.g, target->body, &old_to_new);
        state.s = remap(state.s, old_to_new);
        ++applications;
    }
    return applications;
}

Instance rule1_zero_excess_dangling(const Instance &inst, const PropertyConstants &c) {
    ReductionState state{inst.g, inst.k, {}};
    apply_rule1(state, inst.pi, c);
    return Instance{state.g, state.k, inst.pi};
}

bool is_cyclic_triangle(const Graph &g, std::span<const Vertex> vertices) {
    if (vertices.size() != 3 || g.graph_class().kind != ClassKind::Oriented)
        return false;
    Graph t = induced_subgraph(g, vertices);
    if (t.edge_count() != 3)
        return false;
    std::vector<int> out_degree(3, 0);
    for (const Edge &e : t.edges())
        ++out_degree[e.tail()];
    return out_degree == std::vector<int>{1, 1, 1};
}

std::vector<char> s_neighbourhood(const Graph &g, std::span<const Vertex> s) {
    std::vector<char> in_s(g.vertex_count(), 0), near(g.vertex_count(), 0);
    for (Vertex x : s)
        in_s[x] = 1;
    for (Vertex x : s)
        for (Vertex y : g.neighbors(x))
            if (!in_s[y])
                near[y] = 1;
    return near;
}

namespace {

std::optional<Rule2Match> match_at(const Graph &g, const ClassifiedBlocks &cb, const std::vector<char> &near,
                                   Vertex v) {
    const BlockDecomposition &bd = cb.decomposition;
    if (near[v] || bd.blocks_of_vertex[v].size() != 2)
        return std::nullopt;
    Vertex w[2], u[2];
    for (int i = 0; i < 2; ++i) {
        int b = bd.blocks_of_vertex[v][i];
        const auto &block = bd.blocks[b];
        if (cb.classes[b] != BlockClass::Path || !is_cyclic_triangle(g, block) || cb.interiors[b].size() != 1)
            return std::nullopt;
        w[i] = cb.interiors[b].front();
        if (near[w[i]])
            return std::nullopt;
        for (Vertex x : block)
            if (x != v && x != w[i])
                u[i] = x;
    }
    return Rule2Match{v, w[0], w[1], u[0], u[1]};
}

} // namespace

std::optional<Rule2Match> find_rule2(const Graph &g, std::span<const Vertex> s) {
    ClassifiedBlocks cb = classify_blocks(g, s);
    std::vector<char> near = s_neighbourhood(g, s);
    for (Vertex v : cb.decomposition.cut_vertices)
        if (auto m = match_at(g, cb, near, v))
            return m;
    return std::nullopt;
}

Rule2Kind apply_rule2(ReductionState &state, const Rule2Match &m) {
    ClassifiedBlocks cb = classify_blocks(state.g, state.s);
    std::vector<char> near = s_neighbourhood(state.g, state.s);
    auto check = match_at(state.g, cb, near, m.v);
    bool same = check && ((check->w1 == m.w1 && check->w2 == m.w2 && check->u1 == m.u1 && check->u2 == m.u2) ||
                          (check->w1 == m.w2 && check->w2 == m.w1 && check->u1 == m.u2 && check->u2 == m.u1));
    if (!same)
        throw PreconditionViolated("rule 2 pattern does not hold at vertex " + std::to_string(m.v));

    Vertex only_v[] = {m.v};
    bool splits = !delete_vertices(state.g, only_v).is_connected();

    Vertex gone[] = {m.v, m.w1, m.w2};
    std::vector<Vertex> old_to_new;
    Graph reduced = delete_vertices(state.g, gone, &old_to_new);
    std::vector<Vertex> s = remap(state.s, old_to_new);
    Rule2Kind kind;
    if (splits) {
        std::vector<Vertex> merge_map;
        Vertex a = old_to_new[m.u1], b = old_to_new[m.u2];
        reduced = identify_vertices(reduced, std::min(a, b), std::max(a, b), &merge_map);
        s = remap(s, merge_map);
        kind = Rule2Kind::Identified;
    } else {
        state.k -= Rational(1, 4);
        kind = Rule2Kind::Decremented;
    }
    state.g = std::move(reduced);
    state.s = std::move(s);
    assert_modulator(state, "rule 2");
    return kind;
}

Instance rule2_triangle_path(const Instance &inst, std::span<const Vertex> s, const Rule2Match &m, Rule2Kind *kind) {
    ReductionState state{inst.g, inst.k, {s.begin(), s.end()}};
    std::sort(state.s.begin(), state.s.end());
    Rule2Kind k = apply_rule2(state, m);
    if (kind)
        *kind = k;
    return Instance{state.g, state.k, inst.pi};
}

std::vector<bool> positive_blocks(const Graph &g, const ClassifiedBlocks &cb, const PropertySpec &pi,
                                  const PropertyConstants &c) {
    const auto &blocks = cb.decomposition.blocks;
    std::vector<bool> out(blocks.size(), false);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() < 2)
            continue;
        out[b] = static_cast<int>(blocks[b].size()) >= c.j + 1 || excess(induced_subgraph(g, blocks[b]), pi).ex > 0;
    }
    return out;
}

namespace {

bool interior_touches(const ClassifiedBlocks &cb, int b, const std::vector<char> &near) {
    return std::any_of(cb.interiors[b].begin(), cb.interiors[b].end(), [&](Vertex x) { return near[x] != 0; });
}

} // namespace

B2ZeroSets b2_zero_sets(const Graph &g, std::span<const Vertex> s, const ClassifiedBlocks &cb,
                        const std::vector<bool> &positive) {
    std::vector<char> near = s_neighbourhood(g, s);
    B2ZeroSets out;
    std::vector<char> zero(cb.classes.size(), 0);
    for (int b = 0; b < static_cast<int>(cb.classes.size()); ++b)
        if (cb.classes[b] == BlockClass::Path && !positive[b] && !interior_touches(cb, b, near)) {
            zero[b] = 1;
            out.b2_zero.push_back(b);
        }
    for (Vertex q : cb.decomposition.cut_vertices) {
        const auto &bs = cb.decomposition.blocks_of_vertex[q];
        if (std::all_of(bs.begin(), bs.end(), [&](int b) { return zero[b] != 0; }))
            out.q0.push_back(q);
    }
    return out;
}

B2Partition b2_partition(const Graph &g, std::span<const Vertex> s, const ClassifiedBlocks &cb,
                         const std::vector<bool> &positive) {
    std::vector<char> near = s_neighbourhood(g, s);
    B2Partition out;
    for (int b = 0; b < static_cast<int>(cb.classes.size()); ++b) {
        if (cb.classes[b] != BlockClass::Path)
            continue;
        if (positive[b]) {
            out.plus.push_back(b);
        } else if (interior_touches(cb, b, near)) {
            out.prime.push_back(b);
        } else {
            const auto &block = cb.decomposition.blocks[b];
            bool cut_near = std::any_of(block.begin(), block.end(), [&](Vertex x) {
                return cb.decomposition.is_cut_vertex(x) && near[x];
            });
            (cut_near ? out.dprime : out.tprime).push_back(b);
        }
    }
    return out;
}

namespace {

std::optional<YesWitness> reached(const char *lemma, std::string detail, const Rational &count,
                                  const Rational &threshold) {
    if (count < threshold)
        return std::nullopt;
    return YesWitness{lemma, std::move(detail), count, threshold, std::nullopt, {}};
}

} // namespace

std::optional<YesWitness> yes_checks(const ReductionState &state, const PropertySpec &pi, const PropertyConstants &c,
                                     DispatchCase which) {
    const Graph &g = state.g;
    const Thresholds t = thresholds(c, state.k);

    auto dangling = dangling_components(g);
    if (auto w = reached("danglingbound", "dangling components", static_cast<std::int64_t>(dangling.size()),
                         t.dangling)) {
        for (const auto &dc : dangling)
            w->structure.push_back(dc.body.front());
        return w;
    }

    ClassifiedBlocks cb = classify_blocks(g, state.s);
    const auto &blocks = cb.decomposition.blocks;
    const int nb = cb.decomposition.block_count();

    // For each s, the blocks whose interior it touches.
    std::vector<std::int64_t> star(state.s.size(), 0);
    std::vector<std::vector<Vertex>> star_leaves(state.s.size());
    for (std::size_t i = 0; i < state.s.size(); ++i) {
        Vertex x = state.s[i];
        for (int b = 0; b < nb; ++b) {
            for (Vertex y : cb.interiors[b])
                if (g.adjacent(x, y)) {
                    ++star[i];
                    star_leaves[i].push_back(y);
                    break;
                }
        }
    }
    for (std::size_t i = 0; i < state.s.size(); ++i)
        if (auto w = reached("leafbound", "blocks with an interior neighbour of s", star[i], t.star)) {
            w->center = state.s[i];
            w->structure = star_leaves[i];
            return w;
        }
    std::int64_t star_sum = std::accumulate(star.begin(), star.end(), std::int64_t{0});
    if (auto w = reached("sneighborbound", "S-neighbour incidences over all blocks", star_sum, t.sneighbor))
        return w;

    std::vector<bool> positive = positive_blocks(g, cb, pi, c);
    std::int64_t positive_count = std::count(positive.begin(), positive.end(), true);
    if (auto w = reached("positiveexcessblock", "blocks of G-S with positive excess", positive_count, t.posblocks)) {
        for (int b = 0; b < nb; ++b)
            if (positive[b])
                w->structure.push_back(blocks[b].front());
        return w;
    }

    std::int64_t d = 0;
    for (const auto &block : blocks)
        if (static_cast<int>(block.size()) >= c.j)
            d += static_cast<std::int64_t>(block.size()) / c.j;
    if (auto w = reached("ksquaredkernel", "sum of floor(|B|/j) over blocks with at least j vertices", d,
                         t.large_cliques))
        return w;

    for (int b = 0; b < nb; ++b)
        if (auto w = reached("int", "interior size of one block", static_cast<std::int64_t>(cb.interiors[b].size()),
                             t.interior)) {
            w->structure = cb.interiors[b];
            return w;
        }

    if (which == DispatchCase::OrientedCubic) {
        B2ZeroSets zs = b2_zero_sets(g, state.s, cb, positive);
        for (Vertex x : state.s) {
            std::vector<Vertex> hit;
            for (Vertex q : zs.q0)
                if (g.adjacent(x, q))
                    hit.push_back(q);
            if (auto w = reached("neighborsbound", "cut vertices of Q0 adjacent to s",
                                 static_cast<std::int64_t>(hit.size()), t.q0)) {
                w->center = x;
                w->structure = hit;
                return w;
            }
        }
    }
    return std::nullopt;
}

std::string Outcome::tag() const {
    switch (value.index()) {
    case 0:
        return "yes";
    case 1:
        return "kernel";
    case 2:
        return "unsupported";
    default:
        return "modulator-too-large";
    }
}

namespace {

Outcome trivial_yes(KernelStats stats, const Rational &k) {
    return Outcome{YesOutcome{YesWitness{"trivial", "k <= 0 and every connected graph has excess >= 0", k, 0,
                                         std::nullopt, {}}},
                   std::move(stats)};
}

} // namespace

Outcome kernelize(const Instance &inst, const KernelOptions &options) {
    validate_instance(inst);
    const PropertySpec &pi = inst.pi;
    KernelStats stats;
    stats.n_in = inst.g.vertex_count();
    stats.m_in = inst.g.edge_count();

    if (inst.k <= 0)
        return trivial_yes(stats, inst.k);

    // The case split depends only on Π, so it is decided before any modulator work.
    const DispatchCase which = dispatch_case(pi);
    stats.dispatch = to_string(which);
    if (which == DispatchCase::MaxCutDelegate)
        return Outcome{UnsupportedOutcome{kDelegateReason}, stats};
    if (which == DispatchCase::Outside)
        return Outcome{UnsupportedOutcome{kOutsideReason}, stats};

    const PropertyConstants c = options.constants ? *options.constants : property_constants(pi);
    const Rational limit = 6 * inst.k / (1 - pi.lambda.value());

    Modulator mod;
    try {
        mod = find_modulator(inst.g, modulator_budget(inst.k, pi.lambda));
    } catch (const BudgetExceeded &e) {
        Modulator greedy = greedy_modulator(inst.g);
        stats.modulator_size = static_cast<int>(greedy.s.size());
        stats.modulator_method = to_string(greedy.method);
        return Outcome{ModulatorTooLargeOutcome{greedy.s.size(), limit, e.what()}, stats};
    }
    stats.modulator_size = static_cast<int>(mod.s.size());
    stats.modulator_method = to_string(mod.method);
    if (modulator_gate(mod.s.size(), inst.k, pi.lambda) == Gate::TooLarge)
        return Outcome{ModulatorTooLargeOutcome{mod.s.size(), limit,
                                                "modulator of size " + std::to_string(mod.s.size()) +
                                                    " is not below 6k/(1-lambda) = " + to_string(limit)},
                       stats};

    ReductionState state{inst.g, inst.k, mod.s};
    stats.rule1_applications += apply_rule1(state, pi, c);
    assert_modulator(state, "rule 1");
    if (which == DispatchCase::OrientedCubic) {
        while (state.k > 0) {
            auto m = find_rule2(state.g, state.s);
            if (!m)
                break;
            if (apply_rule2(state, *m) == Rule2Kind::Identified)
                ++stats.rule2_identified;
            else
                ++stats.rule2_decremented;
            stats.rule1_applications += apply_rule1(state, pi, c);
            assert_modulator(state, "rule 1");
        }
    }
    if (state.k <= 0)
        return trivial_yes(stats, state.k);

    if (auto w = yes_checks(state, pi, c, which))
        return Outcome{YesOutcome{*w}, stats};

    const KernelCase kind = which == DispatchCase::OrientedCubic ? KernelCase::Cubic : KernelCase::Quadratic;
    const std::int64_t bound = kernel_size_bound(c, state.k, kind);
    ClassifiedBlocks cb = classify_blocks(state.g, state.s);
    if (kind == KernelCase::Cubic)
        stats.partition = b2_partition(state.g, state.s, cb, positive_blocks(state.g, cb, pi, c));
    stats.blocks = std::move(cb);
    if (state.g.vertex_count() > bound)
        throw BoundViolation("reduced instance has " + std::to_string(state.g.vertex_count()) +
                             " vertices, above the " + to_string(kind) + " bound " + std::to_string(bound) +
                             " at k = " + to_string(state.k));
    return Outcome{KernelOutcome{state.g, state.k, state.s, kind, bound}, stats};
}

} // namespace apt
