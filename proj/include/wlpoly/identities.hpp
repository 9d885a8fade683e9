#pragma once

#include <string>
#include <vector>

#include "wlpoly/linear_solve.hpp"
#include "wlpoly/partition.hpp"

namespace wlpoly {

/**
 * Structured outcome of one identity check.  status is "pass" exactly when
 * every residual in the checked range is zero; failing reports carry a
 * reproducible witness (offending partition plus residual).  The Jacobi
 * search uses infeasible_certificate for its expected negative outcome.
 */
struct VerificationReport {
    enum class Status { pass, fail, infeasible_certificate };

    std::string identity;
    std::string range;
    Status status = Status::pass;
    std::string witness_json; // "null" when there is nothing to show
    long long ms = 0;

    bool passed() const { return status != Status::fail; }
    static const char* status_name(Status s);
    /// {"identity":...,"range":...,"status":...,"witness":...,"ms":...}
    std::string to_json(bool include_timing = true) const;
};

/// Σ_{λ⊢n} F_λ² l_λ = n! (x+a)^n, symbolically in a.
VerificationReport check_average(int n);

/// Σ_{λ⋗μ} c(λ/μ) = Σ_{ρ⋖μ} c(μ/ρ).
VerificationReport check_content_transfer(const Partition& mu);

/// Σ_{λ⋗μ} F_λ c(λ/μ) = 0.
VerificationReport check_weighted_content_sum(const Partition& mu);

/// Σ_k (n_k+1-r)/(n_k+1) Π_{j≠k}(n_k+1-n_j)/(n_k-n_j) = r Π_k n_k/(n_k+1),
/// as exact rationals.  Throws ZeroDenominator on entry collisions.
VerificationReport check_degree_vector_identity(const DegreeVector& dv);

/// Monic classical-Laguerre Wronskian of the m×n rectangle equals the
/// modified-family polynomial of the transposed rectangle with a -> -a-n.
VerificationReport rectangle_duality(int n, int m);

/// Σ_{λ⊢n} F_λ² = n!.
VerificationReport plancherel_normalization(int n);

struct JacobiSample {
    Rat alpha;
    Rat beta;
};

/// One fixed-parameter attempt at expressing F_λ A_λ through covers and
/// dominoes with constant coefficients.
struct JacobiSampleOutcome {
    JacobiSample sample;
    LinearSolveResult solve;
};

struct JacobiFormAnalysis {
    Partition partition;
    std::vector<std::string> unknown_names;
    std::vector<JacobiSampleOutcome> outcomes;
    /// One shared set of constants required to work at every sample
    /// simultaneously (the per-sample solution sets intersected).
    LinearSolveResult intersected;
    bool solvable_per_sample = false; // every sample's own system solvable
};

/// Builds, per sample, the exact linear system matching
///   F_λ A_λ = Σ_{μ⋖λ}(a x + b) F_μ A_μ + Σ_{ρ∈R2-}(c x² + d x + e) F_ρ A_ρ
/// coefficientwise in x, and solves it — once per sample (constants may
/// depend on the parameters) and once stacked across all samples (constants
/// may not).  Certificates come from solve_linear.  λ must be non-empty.
JacobiFormAnalysis jacobi_form_analysis(const Partition& p,
                                        const std::vector<JacobiSample>& samples);

/// Report wrapper.  Status is pass when one set of constants works at every
/// sample, infeasible-certificate when the intersected system has an exact
/// infeasibility certificate; the witness always records the per-sample
/// outcomes (solvable at each fixed sample is the expected sanity result).
VerificationReport jacobi_form_search(const Partition& p,
                                      const std::vector<JacobiSample>& samples);

/// Three generic parameter pairs with non-integer alpha+beta.
std::vector<JacobiSample> default_jacobi_samples();

} // namespace wlpoly
