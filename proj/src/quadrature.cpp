#include "tomex/numeric.hpp"

#include <cmath>

namespace tomex {

// Nodes are the roots of the Legendre polynomial, found by Newton iteration
// from the Chebyshev-based initial guess; weights from the derivative.
Quadrature gauss_legendre_unit(int points) {
    Quadrature q;
    q.nodes.resize(points);
    q.weights.resize(points);
    const int n = points;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        // map from [-1,1] to [0,1]
        q.nodes[i] = 0.5 * (1.0 - x);
        q.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        const double w = 1.0 / ((1.0 - x * x) * pp * pp);
        q.weights[i] = w;
        q.weights[n - 1 - i] = w;
    }
    return q;
}

} // namespace tomex
