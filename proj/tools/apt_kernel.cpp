// apt-kernel: command-line front end for the kernelizer.
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "apt/axioms.hpp"
#include "apt/graph_io.hpp"
#include "apt/kernelizer.hpp"
#include "apt/oracle.hpp"
#include "apt/report.hpp"

namespace {

using namespace apt;

constexpr int kExitKernel = 0;
constexpr int kExitError = 1;
constexpr int kExitYes = 10;
constexpr int kExitUnsupported = 20;
constexpr int kExitModulator = 21;

// "a..b" or a single integer.
std::pair<long long, long long> parse_range(const std::string &text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long long v = std::stoll(text);
            return {v, v};
        }
        long long lo = std::stoll(text.substr(0, dots)), hi = std::stoll(text.substr(dots + 2));
        if (lo > hi)
            throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw std::invalid_argument("expected a range 'a..b' or an integer, got '" + text + "'");
    }
}

int exit_code(const Outcome &o) {
    switch (o.value.index()) {
    case 0:
        return kExitYes;
    case 1:
        return kExitKernel;
    case 2:
        return kExitUnsupported;
    default:
        return kExitModulator;
    }
}

void print_human(const nlohmann::json &r) {
    const auto &inst = r["instance"];
    std::cout << "instance: n=" << inst["n"] << " m=" << inst["m"] << " k=" << inst["k"].get<std::string>()
              << " property=" << inst["property"].get<std::string>() << "\n";
    std::cout << "outcome: " << r["outcome"].get<std::string>() << "\n";
    if (r.contains("witness"))
        std::cout << "witness: " << r["witness"]["lemma"].get<std::string>() << " ("
                  << r["witness"]["count"].get<std::string>() << " >= " << r["witness"]["threshold"].get<std::string>()
                  << ")\n";
    if (r.contains("kernel")) {
        const auto &k = r["kernel"];
        std::cout << "kernel: n'=" << k["n"] << " m'=" << k["m"] << " k'=" << k["k"].get<std::string>()
                  << " bound=" << k["bound"] << " (" << k["bound_kind"].get<std::string>() << ")\n";
    }
    if (r.contains("reason"))
        std::cout << "reason: " << r["reason"].get<std::string>() << "\n";
    if (r.contains("diagnostic"))
        std::cout << "diagnostic: " << r["diagnostic"]["message"].get<std::string>() << "\n";
    std::cout << "rules: rule1=" << r["rules"]["rule1"] << " rule2 identified=" << r["rules"]["rule2_identified"]
              << " decremented=" << r["rules"]["rule2_decremented"] << "\n";
}

struct KernelizeArgs {
    std::string graph, property, k, out;
    bool json = false, timings = false;
};

int run_kernelize(const KernelizeArgs &a) {
    Instance inst{read_graph_file(a.graph), parse_parameter(a.k), property_by_name(a.property)};
    auto start = std::chrono::steady_clock::now();
    Outcome outcome = kernelize(inst);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    auto report = run_report(inst, outcome, a.timings ? std::optional<double>(elapsed.count()) : std::nullopt);
    if (a.json)
        std::cout << report.dump(2) << "\n";
    else
        print_human(report);
    if (!a.out.empty())
        if (const auto *kernel = std::get_if<KernelOutcome>(&outcome.value)) {
            std::ofstream out(a.out, std::ios::binary);
            out << "# k " << to_string(kernel->k) << "\n" << write_graph(kernel->g);
        }
    return exit_code(outcome);
}

int run_constants(const std::string &property, bool json) {
    PropertySpec pi = property_by_name(property);
    PropertyConstants c = property_constants(pi);
    auto report = constants_report(pi, c, 3);
    if (json) {
        std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::cout << "property: " << pi.name << "\nlambda: " << report["lambda"].get<std::string>()
              << "\nj: " << c.j << "\na: " << report["a"].get<std::string>()
              << "\ninf_ak: " << report["inf_ak"].get<std::string>() << "\n";
    for (int k = 1; k <= 3; ++k) {
        std::cout << "k = " << k << "\n";
        for (const auto &[name, value] : report["thresholds"][std::to_string(k)].items())
            std::cout << "  " << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return 0;
}

int run_check_axioms(const std::string &property, int n_max, bool json) {
    PropertySpec pi = property_by_name(property);
    if (n_max <= 0)
        n_max = default_axiom_n_max(pi.graph_class);
    AxiomReport report = check_axioms(pi, n_max);
    HereditaryReport hereditary = is_hereditary_upto(pi, n_max);
    auto j = axiom_report_json(pi, n_max, report, hereditary);
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const AxiomCheck *check : {&report.inclusiveness, &report.block_additivity, &report.subgraph_extension}) {
            std::cout << check->axiom << ": " << (check->passed() ? "pass" : "FAIL") << " (" << check->cases_checked
                      << " cases)\n";
            for (const auto &ce : check->counterexamples)
                std::cout << "  counterexample: " << ce << "\n";
        }
        std::cout << "hereditary up to " << n_max << ": " << (hereditary.hereditary ? "yes" : "no") << " (declared "
                  << (pi.declared_hereditary ? "yes" : "no") << ")\n";
    }
    bool hereditary_ok = !pi.declared_hereditary || hereditary.hereditary;
    return report.all_passed() && hereditary_ok ? 0 : kExitError;
}

struct VerifyRow {
    std::uint64_t seed;
    long long k;
    std::string outcome;
    bool oracle = false;
    std::string violation;
};

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
    threads = std::max(1, threads);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                fn(i);
        });
    for (auto &th : pool)
        th.join();
}

int run_verify(const std::string &property, const std::string &seeds, const std::string &ks, int threads,
               bool json) {
    PropertySpec pi = property_by_name(property);
    auto [s_lo, s_hi] = parse_range(seeds);
    auto [k_lo, k_hi] = parse_range(ks);
    KernelOptions options;
    if (dispatch_case(pi) == DispatchCase::Quadratic || dispatch_case(pi) == DispatchCase::OrientedCubic)
        options.constants = property_constants(pi);

    std::vector<VerifyRow> rows;
    for (long long s = s_lo; s <= s_hi; ++s)
        for (long long k = k_lo; k <= k_hi; ++k)
            rows.push_back({static_cast<std::uint64_t>(s), k, "", false, ""});
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        VerifyRow &row = rows[i];
        Instance inst = corpus_instance(pi, row.seed, row.k);
        try {
            EquivalenceReport rep = equivalence_check(inst, options);
            row.outcome = rep.outcome;
            row.oracle = rep.oracle_answer;
        } catch (const ContractViolation &e) {
            row.outcome = "violation";
            row.violation = std::string(e.what()) + "\n" + e.payload();
        } catch (const BoundViolation &e) {
            row.outcome = "bound-violation";
            row.violation = e.what();
        }
    });

    std::map<std::string, int> tally;
    int violations = 0, oracle_yes = 0;
    for (const auto &row : rows) {
        ++tally[row.outcome];
        oracle_yes += row.oracle;
        if (!row.violation.empty()) {
            ++violations;
            std::cerr << "seed " << row.seed << " k " << row.k << ": " << row.violation << "\n";
        }
    }
    nlohmann::json j{{"property", pi.name}, {"instances", rows.size()}, {"outcomes", tally},
                     {"oracle_yes", oracle_yes}, {"violations", violations}};
    if (json)
        std::cout << j.dump(2) << "\n";
    else {
        std::cout << "property " << pi.name << ": " << rows.size() << " instances, " << violations << " violations\n";
        for (const auto &[tag, count] : tally)
            std::cout << "  " << tag << ": " << count << "\n";
        std::cout << "  oracle YES: " << oracle_yes << "\n";
    }
    return violations == 0 ? 0 : kExitError;
}

int run_bench(const std::string &property, const std::string &ks, const std::string &seeds, const std::string &format) {
    PropertySpec pi = property_by_name(property);
    auto [k_lo, k_hi] = parse_range(ks);
    auto [s_lo, s_hi] = parse_range(seeds);
    PropertyConstants c = property_constants(pi);
    KernelOptions options{c};
    const KernelCase kind = dispatch_case(pi) == DispatchCase::OrientedCubic ? KernelCase::Cubic : KernelCase::Quadratic;
    const bool markdown = format == "markdown";
    if (markdown)
        std::cout << "| k | instances | kernels | mean kernel vertices | bound | utilization |\n|---|---|---|---|---|---|\n";
    else
        std::cout << "k,instances,kernels,mean_kernel_vertices,bound,utilization\n";
    for (long long k = k_lo; k <= k_hi; ++k) {
        long long instances = 0, kernels = 0, vertices = 0;
        for (long long s = s_lo; s <= s_hi; ++s) {
            Outcome o = kernelize(corpus_instance(pi, static_cast<std::uint64_t>(s), k), options);
            ++instances;
            if (const auto *kernel = std::get_if<KernelOutcome>(&o.value)) {
                ++kernels;
                vertices += kernel->g.vertex_count();
            }
        }
        std::int64_t bound = kernel_size_bound(c, k, kind);
        double mean = kernels ? static_cast<double>(vertices) / static_cast<double>(kernels) : 0.0;
        std::ostringstream util;
        util << std::setprecision(6) << mean / static_cast<double>(bound);
        std::ostringstream mean_s;
        mean_s << std::fixed << std::setprecision(3) << mean;
        if (markdown)
            std::cout << "| " << k << " | " << instances << " | " << kernels << " | " << mean_s.str() << " | " << bound
                      << " | " << util.str() << " |\n";
        else
            std::cout << k << ',' << instances << ',' << kernels << ',' << mean_s.str() << ',' << bound << ','
                      << util.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kernelization for problems parameterized above the Poljak-Turzik bound"};
    app.require_subcommand(1);

    KernelizeArgs ka;
    auto *kern = app.add_subcommand("kernelize", "Kernelize one instance");
    kern->add_option("--graph", ka.graph, "apt-graph v1 file")->required();
    kern->add_option("--property", ka.property, "bipartite | qcol:q | acyclic-oriented | balanced-signed")->required();
    kern->add_option("--k", ka.k, "parameter, integer or p/q with q dividing 4")->required();
    kern->add_flag("--json", ka.json, "print the JSON report");
    kern->add_flag("--timings", ka.timings, "include wall-clock timings in the report");
    kern->add_option("--out", ka.out, "write the kernel graph here");

    std::string property;
    bool json = false;
    auto *cons = app.add_subcommand("constants", "Print j, a, inf_AK and the thresholds for k = 1, 2, 3");
    cons->add_option("--property", property)->required();
    cons->add_flag("--json", json);

    int n_max = 0;
    auto *ax = app.add_subcommand("check-axioms", "Exhaustively check the extendibility axioms");
    ax->add_option("--property", property)->required();
    ax->add_option("--n-max", n_max, "largest order enumerated (default 5 simple, 4 otherwise)");
    ax->add_flag("--json", json);

    std::string seeds = "1..100", ks = "1..3", format = "csv";
    int threads = 1;
    auto *ver = app.add_subcommand("verify", "Check kernelizer outcomes against brute force on the seeded corpus");
    ver->add_option("--property", property)->required();
    ver->add_option("--seeds", seeds, "seed range a..b");
    ver->add_option("--k", ks, "k range a..b");
    ver->add_option("--threads", threads);
    ver->add_flag("--json", json);

    auto *bench = app.add_subcommand("bench", "Kernel size against the bound for a range of k");
    bench->add_option("--property", property)->required();
    bench->add_option("--k", ks, "k range a..b");
    bench->add_option("--seeds", seeds, "seed range a..b");
    bench->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*kern)
            return run_kernelize(ka);
        if (*cons)
            return run_constants(property, json);
        if (*ax)
            return run_check_axioms(property, n_max, json);
        if (*ver)
            return run_verify(property, seeds, ks, threads, json);
        if (*bench)
            return run_bench(property, ks, seeds, format);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
