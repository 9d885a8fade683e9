#pragma once

#include <memory>
#include <optional>

#include "wlpoly/partition.hpp"
#include "wlpoly/poly_matrix.hpp"
#include "wlpoly/sequences.hpp"

namespace wlpoly {

enum class FamilyKind {
    modified_laguerre,
    hermite,
    classical_laguerre,
    modified_jacobi,
    custom,
};

/// Which family to take Wronskians of, at which partition.  alpha0/beta0
/// pin parameters to rationals; when absent the symbolic variable is used
/// (modified_jacobi requires both).
struct WronskianRequest {
    FamilyKind kind = FamilyKind::modified_laguerre;
    Partition partition;
    std::optional<Rat> alpha0;
    std::optional<Rat> beta0;
    std::shared_ptr<const AppellSpec> custom;
};

/// r x r matrix whose (i,j) entry is the (i-1)-st derivative of the family
/// member of degree n_j, where (n_1,...,n_r) is the degree vector.  Rows
/// after the first are produced by formally differentiating the row above,
/// so the construction works for non-Appell families too.  0x0 for the
/// empty partition.
PolyMatrix wronskian_matrix(const WronskianRequest& req);

/// det(wronskian_matrix) / Π_{i<j}(n_j - n_i), checked monic of degree |λ|.
/// When the determinant has integer coefficients the division is performed
/// with remainder-zero checks.  Not valid for classical_laguerre (use
/// wronskian_classical_monic, which rescales to monic instead).
MPoly wronskian_poly(const WronskianRequest& req);

/// Uncached variant, for benchmarking and for one-off parameter sweeps.
MPoly wronskian_poly_uncached(const WronskianRequest& req);

/// Wronskian of classical Laguerre polynomials rescaled by the exact
/// constant making it monic of degree |λ|.  Throws
/// DegenerateLeadingCoefficient if the leading coefficient vanishes
/// identically or is not a constant that a scalar can normalize away.
MPoly wronskian_classical_monic(const Partition& p,
                                std::optional<Rat> alpha0 = std::nullopt);

} // namespace wlpoly
