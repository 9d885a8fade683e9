#pragma once

#include <map>
#include <mutex>

#include "wlpoly/mpoly.hpp"
#include "wlpoly/partition.hpp"

namespace wlpoly {

enum class RecurrenceFamily { laguerre_thm1, laguerre_alt, hermite };

/**
 * Memoized evaluation of the Wronskian-polynomial recurrences over the
 * Young lattice.
 *
 * Entries store the integer-friendly scaled form F_λ·p_λ; the division by
 * F_λ happens only at the boundary (normalized()) and is checked exact,
 * which turns any arithmetic slip anywhere in the lattice walk into a hard
 * InexactDivision failure.
 *
 * Entries for distinct partitions of one size may be filled concurrently
 * once all smaller sizes are materialized (materialize_up_to does exactly
 * that); the lock guarantees readers only see complete entries.
 */
class RecurrenceTable {
public:
    explicit RecurrenceTable(RecurrenceFamily family) : family_(family) {}

    /// F_λ · p_λ where p is the family polynomial (l_λ or He_λ).
    MPoly scaled(const Partition& p) const;
    /// p_λ itself; the division by F_λ must be exact.
    MPoly normalized(const Partition& p) const;

    void materialize_up_to(int max_size, unsigned threads = 1) const;

private:
    MPoly compute_scaled(const Partition& p) const;

    RecurrenceFamily family_;
    mutable std::mutex mu_;
    mutable std::map<Partition, MPoly> memo_;
};

/// Shared tables behind the free functions below (handy for batch sweeps).
const RecurrenceTable& thm1_table();
const RecurrenceTable& alt_table();
const RecurrenceTable& hermite_table();

/// l_λ by the content/domino recurrence
/// F_λ l_λ = Σ_{μ⋖λ}(x+a-c(λ/μ)) F_μ l_μ + x(|λ|-1) Σ_{ρ∈R2-}(-1)^ht F_ρ l_ρ.
MPoly wlp_thm1(const Partition& p);

/// l_λ by the all-strip-sizes recurrence
/// F_λ l_λ = (x+a) Σ_{μ⋖λ} F_μ l_μ
///           + a Σ_{k=2}^{|λ|} (-1)^{k-1} (|λ|-1)!/(|λ|-k)! Σ_{ν∈Rk-}(-1)^ht F_ν l_ν.
MPoly wlp_alt(const Partition& p);

/// He_λ by F_λ He_λ = x Σ F_μ He_μ - (|λ|-1) Σ (-1)^ht F_ρ He_ρ.
MPoly whp_recurrence(const Partition& p);

/**
 * The three permutation-sum terms of the determinant rewrite, computed
 * literally: with degree vector n, shifted indices σ(n)_i = n_i - σ(i) + 1
 * and n[j] the vector with the j-th entry lowered,
 *
 *   F_λ l_λ = A + sign_prefactor · B + C,
 *   sign_prefactor = (-1)^{r(r-1)/2} (|λ|-1)!.
 *
 * Terms whose shifted index vector has a negative entry vanish, as do
 * family members of negative index.  B is identically zero (tested); A and
 * C collapse to the cover and domino sums of the recurrence.
 */
struct ProofDecomposition {
    MPoly a;
    MPoly b;
    MPoly c;
    Rat sign_prefactor;
};

/// Throws EmptyPartition for the empty partition and LengthBoundExceeded
/// when length(λ) > max_length (the permutation sum has length! terms).
ProofDecomposition proof_decomposition(const Partition& p, int max_length = 6);

/// Pair-cancellation map on X = {(j,σ) : σ(j) != r}: T(j,σ) = (k, σ·(j k))
/// with k = σ^{-1}(σ(j)+1).
struct TMapCheck {
    bool involution = false;      // T∘T = id on all of X
    bool sign_flip = false;       // sgn(τ) = -sgn(σ)
    bool value_match = false;     // σ(j) = τ(k)
    bool vector_match = false;    // σ(n[j])_i = τ(n[k])_i for all i
    long long pairs = 0;
};
TMapCheck verify_t_map(int r, const DegreeVector& dv);

} // namespace wlpoly
