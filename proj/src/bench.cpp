#include "opacity/bench.hpp"

#include <random>
#include <sstream>

namespace opacity {

CnfFormula unsat_family_formula(std::size_t n) {
    if (n < 1) throw InputError("family needs at least one variable");
    return CnfFormula(n, {{1}, {-1}});
}

ColorGraph random_family_graph(std::size_t n, std::uint32_t seed) {
    std::seed_seq seq{seed, static_cast<std::uint32_t>(n)};
    std::mt19937 rng(seq);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (rng() & 1U) edges.emplace_back(i, j);
    return ColorGraph(n, std::move(edges));
}

std::string BenchReport::to_tsv() const {
    std::ostringstream out;
    out << "family\tn\tstates\ttransitions\tholds\twitness_length\texplored\tmillis\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    for (const auto& r : rows)
        out << family << '\t' << r.n << '\t' << r.states << '\t' << r.transitions << '\t' << (r.holds ? 1 : 0)
            << '\t' << r.witness_length << '\t' << r.explored << '\t' << r.millis << '\n';
    return out.str();
}

BenchReport bench_family(BenchFamily family, std::size_t n_min, std::size_t n_max, std::uint32_t seed) {
    if (n_min > n_max) throw InputError("empty size range");
    BenchReport report;
    report.family = family == BenchFamily::sat ? "sat-family" : "col-family";
    for (std::size_t n = n_min; n <= n_max; ++n) {
        CsoInstance inst = family == BenchFamily::sat ? sat_to_cso(unsat_family_formula(n))
                                                      : coloring_to_cso(random_family_graph(n, seed));
        Verdict v = check_cso(inst.nfa, inst.query, inst.omap);
        BenchRow row;
        row.n = n;
        row.states = inst.nfa.num_states();
        row.transitions = inst.nfa.num_transitions();
        row.holds = v.holds;
        row.witness_length = v.witness ? v.witness->size() : 0;
        row.explored = v.stats.explored_nodes;
        row.millis = v.stats.elapsed.count();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace opacity
