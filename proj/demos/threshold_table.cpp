// Tabulates the spectral threshold for small (n, m): which branch is active,
// and how the two candidate extremal graphs measure under power iteration
// compared to their closed forms.

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "srm/srm.hpp"

int main() {
    std::printf("%3s %2s %14s %7s %14s %14s %9s\n", "n", "m", "threshold", "branch",
                "rho(A^1)", "rho(A^{m+1})", "max err");
    for (int m = 1; m <= 4; ++m) {
        for (int n = 2 * m + 2; n <= 3 * m + 6; ++n) {
            const double clique = 2.0 * m;
            const double split = srm::split_graph_rho(n, m);
            const char* branch = split > clique ? "split" : (split < clique ? "clique" : "tie");

            const double r1 = srm::spectral_radius(srm::construct_extremal({n, m, 1})).rho;
            const double rs = srm::spectral_radius(srm::construct_extremal({n, m, m + 1})).rho;
            const double err = std::max(std::abs(r1 - clique), std::abs(rs - split));
            std::printf("%3d %2d %14.10f %7s %14.10f %14.10f %9.2e\n", n, m,
                        srm::threshold(n, m), branch, r1, rs, err);
        }
        std::printf("\n");
    }

    // the branches cross at n = 3m + 2 and the tie is exact in doubles
    std::printf("exact ties at n = 3m + 2:");
    for (int m = 1; m <= 10; ++m)
        std::printf(" m=%d:%s", m, srm::threshold(3 * m + 2, m) == 2.0 * m ? "yes" : "NO");
    std::printf("\n");
    return 0;
}
