#include "qfock/quadrature.hpp"

#include <cmath>
#include <string>

namespace qfock {

void gauss_legendre(std::size_t n, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    const double xm = 0.5 * (hi + lo);
    const double xl = 0.5 * (hi - lo);
    for (std::size_t i = 1; i <= m; ++i) {
        double z = std::cos(M_PI * (static_cast<double>(i) - 0.25) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 -
                      (static_cast<double>(j) - 1.0) * p3) /
                     static_cast<double>(j);
            }
            pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-15) break;
        }
        double p1 = 1.0, p2 = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 -
                  (static_cast<double>(j) - 1.0) * p3) /
                 static_cast<double>(j);
        }
        pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
        nodes[i - 1] = xm - xl * z;
        nodes[n - i] = xm + xl * z;
        weights[i - 1] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        weights[n - i] = weights[i - 1];
    }
}

QuadratureGrid QuadratureGrid::make(std::size_t n_r, std::size_t n_theta, std::size_t n_phi,
                                    std::size_t n_psi, double r_max, MeasureVariant variant) {
    if (n_r == 0 || n_theta == 0 || n_phi == 0 || n_psi == 0 || !(r_max > 0.0)) {
        throw BadGrid("quadrature grid needs positive node counts and radial range");
    }
    QuadratureGrid g;
    g.r_max = r_max;
    g.variant = variant;

    gauss_legendre(n_r, 0.0, r_max, g.r_nodes, g.r_weights);
    const double constant = 1.0 / (4.0 * M_PI * M_PI);
    for (std::size_t i = 0; i < n_r; ++i) {
        const double r = g.r_nodes[i];
        double w = g.r_weights[i] * r * constant;
        if (variant == MeasureVariant::GaussianWeighted) w *= std::exp(-r * r);
        g.r_weights[i] = w;
    }

    g.theta_nodes.resize(n_theta);
    for (std::size_t i = 0; i < n_theta; ++i) {
        g.theta_nodes[i] = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_theta);
    }
    g.theta_weight = 2.0 * M_PI / static_cast<double>(n_theta);

    gauss_legendre(n_phi, 0.0, M_PI, g.phi_nodes, g.phi_weights);
    for (std::size_t i = 0; i < n_phi; ++i) g.phi_weights[i] *= std::sin(g.phi_nodes[i]);

    g.psi_nodes.resize(n_psi);
    for (std::size_t i = 0; i < n_psi; ++i) {
        g.psi_nodes[i] = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_psi);
    }
    g.psi_weight = 2.0 * M_PI / static_cast<double>(n_psi);
    return g;
}

QuadratureGrid QuadratureGrid::gram_default() {
    return make(48, 16, 12, 16, 8.0, MeasureVariant::GaussianWeighted);
}

QuadratureGrid QuadratureGrid::resolution_default() {
    return make(48, 16, 12, 16, 16.0, MeasureVariant::Plain);
}

double QuadratureGrid::total_weight() const {
    double sr = 0.0;
    for (double w : r_weights) sr += w;
    double sphi = 0.0;
    for (double w : phi_weights) sphi += w;
    return sr * (theta_weight * static_cast<double>(theta_nodes.size())) * sphi *
           (psi_weight * static_cast<double>(psi_nodes.size()));
}

namespace {

Quaternion direction(double theta, double phi, double psi) {
    const double st = std::sin(theta);
    return {std::cos(theta), st * std::sin(phi) * std::cos(psi),
            st * std::sin(phi) * std::sin(psi), st * std::cos(phi)};
}

// shared accumulation over the product grid; entries are weighted sums of
// mag_m mag_n conj(u^m) u^n (or the outer-product order) with u the unit
// quaternion at the angular node
template <typename MagnitudeFn>
FockOperator accumulate(std::size_t nmax, const QuadratureGrid& grid, MagnitudeFn&& magnitudes,
                        bool outer_product) {
    const std::size_t dim = nmax + 1;
    FockOperator acc(dim);
    std::vector<double> mag(dim);
    std::vector<Quaternion> upow(dim);

    for (std::size_t ir = 0; ir < grid.r_nodes.size(); ++ir) {
        magnitudes(grid.r_nodes[ir], mag);
        const double wr = grid.r_weights[ir];
        for (std::size_t it = 0; it < grid.theta_nodes.size(); ++it) {
            for (std::size_t ip = 0; ip < grid.phi_nodes.size(); ++ip) {
                for (std::size_t is = 0; is < grid.psi_nodes.size(); ++is) {
                    const Quaternion u = direction(grid.theta_nodes[it], grid.phi_nodes[ip],
                                                   grid.psi_nodes[is]);
                    upow[0] = Quaternion::one();
                    for (std::size_t m = 1; m < dim; ++m) upow[m] = upow[m - 1] * u;
                    const double w = wr * grid.theta_weight * grid.phi_weights[ip] *
                                     grid.psi_weight;
                    for (std::size_t m = 0; m < dim; ++m) {
                        for (std::size_t n = 0; n < dim; ++n) {
                            const Quaternion prod = outer_product
                                                        ? upow[m] * conj(upow[n])
                                                        : conj(upow[m]) * upow[n];
                            acc(m, n) += prod * (w * mag[m] * mag[n]);
                        }
                    }
                }
            }
        }
    }
    return acc;
}

}  // namespace

FockOperator gram_matrix(std::size_t nmax, const QuadratureGrid& grid) {
    if (grid.variant != MeasureVariant::GaussianWeighted) {
        throw BadGrid("monomial Gram matrix needs the gaussian-weighted variant");
    }
    // mag[n] = r^n / sqrt(n!)
    auto magnitudes = [](double r, std::vector<double>& mag) {
        double c = 1.0;
        for (std::size_t n = 0; n < mag.size(); ++n) {
            mag[n] = c;
            c = c * r / std::sqrt(static_cast<double>(n + 1));
        }
    };
    return accumulate(nmax, grid, magnitudes, /*outer_product=*/false);
}

ResolutionResult resolution_of_identity(std::size_t nmax, const QuadratureGrid& grid,
                                        std::size_t n_trunc) {
    if (grid.variant != MeasureVariant::Plain) {
        throw BadGrid("identity resolution needs the plain variant; the Gaussian comes from "
                      "the state normalization");
    }
    if (nmax >= n_trunc) {
        throw BadGrid("requested block " + std::to_string(nmax) +
                      " exceeds state truncation " + std::to_string(n_trunc));
    }
    // coherent coefficients: mag[n] = exp(-r^2/2) r^n / sqrt(n!)
    auto magnitudes = [](double r, std::vector<double>& mag) {
        double c = std::exp(-0.5 * r * r);
        for (std::size_t n = 0; n < mag.size(); ++n) {
            mag[n] = c;
            c = c * r / std::sqrt(static_cast<double>(n + 1));
        }
    };
    ResolutionResult res{accumulate(nmax, grid, magnitudes, /*outer_product=*/true), 0.0, 0.0};

    const FockOperator id = FockOperator::identity(nmax + 1);
    res.max_dev = block_dev(res.block, id, nmax + 1);
    res.frobenius_dev = frobenius(res.block - id);
    return res;
}

}  // namespace qfock
