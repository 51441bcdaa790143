#ifndef QFOCK_QUADRATURE_HPP
#define QFOCK_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "qfock/fock_operator.hpp"
#include "qfock/quaternion.hpp"

namespace qfock {

/// Which radial weight the grid realizes. The gaussian variant carries
/// r exp(-r^2) dr for bare monomials; the plain variant carries r dr and
/// expects the Gaussian to arrive through normalized state coefficients.
enum class MeasureVariant { GaussianWeighted, Plain };

/// Product rule over (r, theta, phi, psi): Gauss-Legendre radial nodes on
/// [0, r_max], uniform theta and psi on [0, 2pi), Gauss-Legendre phi on
/// [0, pi] against sin(phi). The overall 1/(4 pi^2) constant is folded
/// into the radial weights.
struct QuadratureGrid {
    std::vector<double> r_nodes, r_weights;
    std::vector<double> theta_nodes;
    double theta_weight = 0.0;
    std::vector<double> phi_nodes, phi_weights;
    std::vector<double> psi_nodes;
    double psi_weight = 0.0;
    double r_max = 0.0;
    MeasureVariant variant = MeasureVariant::GaussianWeighted;

    static QuadratureGrid make(std::size_t n_r, std::size_t n_theta, std::size_t n_phi,
                               std::size_t n_psi, double r_max, MeasureVariant variant);

    /// Grid sized for monomial orthonormality checks up to degree ~8.
    static QuadratureGrid gram_default();
    /// Grid sized for the identity-resolution checks up to level 6.
    static QuadratureGrid resolution_default();

    std::size_t point_count() const {
        return r_nodes.size() * theta_nodes.size() * phi_nodes.size() * psi_nodes.size();
    }
    /// Total measure mass; one (up to the radial tail) for the gaussian
    /// variant.
    double total_weight() const;
};

/// Gauss-Legendre nodes and weights on [lo, hi].
void gauss_legendre(std::size_t n, double lo, double hi, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// G_{mn} = integral of conj(phi_m) phi_n over the gaussian-weighted grid,
/// for the monomial family phi_n = q^n / sqrt(n!); expected identity.
/// Returns an (nmax+1) x (nmax+1) quaternion matrix.
FockOperator gram_matrix(std::size_t nmax, const QuadratureGrid& grid);

/// Accumulated rank-one coherent projectors over the plain-variant grid.
/// block holds entries (m, n <= nmax) of the accumulated operator at state
/// truncation n_trunc; max_dev is its entrywise distance from identity.
struct ResolutionResult {
    FockOperator block;
    double max_dev = 0.0;
    double frobenius_dev = 0.0;
};

ResolutionResult resolution_of_identity(std::size_t nmax, const QuadratureGrid& grid,
                                        std::size_t n_trunc);

}  // namespace qfock

#endif
