// Shifts one small graph to its fixed point, replaying the trace step by
// step: every applied (x, y), the label potential after it, and what the
// process does to the spectral radius and the matching number.

#include <cstdio>

#include "srm/srm.hpp"

namespace {

void print_edges(const char* tag, const srm::Graph& g) {
    std::printf("%s [%s]", tag, srm::graph6_encode(g).c_str());
    for (auto [u, v] : srm::edges(g)) std::printf(" {%d,%d}", u, v);
    std::printf("\n");
}

}  // namespace

int main() {
    // hexagon with one long chord; connected and far from shifted
    srm::Graph g(6);
    for (int v = 1; v <= 6; ++v) g.add_edge_in_place(v, v % 6 + 1);
    g.add_edge_in_place(2, 5);

    print_edges("start ", g);
    const double rho0 = srm::spectral_radius(g).rho;
    const int nu0 = srm::max_matching(g).size;
    std::printf("rho = %.12f   nu = %d   potential = %llu   shifted = %s\n\n", rho0, nu0,
                static_cast<unsigned long long>(srm::label_potential(g)),
                srm::is_shifted(g) ? "yes" : "no");

    const srm::ShiftTrace trace = srm::fully_shift(g);
    srm::Graph cur = g;
    for (const srm::ShiftStep& s : trace.steps) {
        cur = srm::shift_xy(cur, s.x, s.y);
        std::printf("shift (%d,%d) moved %d edge%s   potential -> %llu\n", s.x, s.y,
                    s.edges_moved, s.edges_moved == 1 ? "" : "s",
                    static_cast<unsigned long long>(srm::label_potential(cur)));
    }
    if (!srm::graphs_equal(cur, trace.result)) {
        std::printf("replayed trace disagrees with fully_shift\n");
        return 1;
    }

    std::printf("\n");
    print_edges("result", trace.result);
    const double rho1 = srm::spectral_radius(trace.result).rho;
    const int nu1 = srm::max_matching(trace.result).size;
    std::printf("rho = %.12f   nu = %d   potential = %llu   shifted = %s\n", rho1, nu1,
                static_cast<unsigned long long>(srm::label_potential(trace.result)),
                srm::is_shifted(trace.result) ? "yes" : "no");
    std::printf("rho change = %+.3e (never negative), nu change = %+d (never positive)\n",
                rho1 - rho0, nu1 - nu0);
    return (rho1 + 1e-9 >= rho0 && nu1 <= nu0 && srm::is_shifted(trace.result)) ? 0 : 1;
}
