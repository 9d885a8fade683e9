#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wlpoly/rational.hpp"

namespace wlpoly {

/**
 * Integer partition in canonical form: weakly decreasing positive parts,
 * trailing zeros stripped at construction.  Equality is structural, so two
 * Partition values are equal exactly when they are the same partition.
 * Immutable after construction.
 */
class Partition {
public:
    Partition() = default; // the empty partition
    explicit Partition(std::vector<int> parts);

    /// Comma-separated non-negative parts, e.g. "3,1"; "" is the empty
    /// partition.  Throws MalformedPartition on non-integer tokens or an
    /// increasing adjacent pair.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }    // |λ|, the number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string to_text() const;      // "3,1"; "" for the empty partition
    std::string to_json_text() const; // "[3,1]"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Degrees n_i = λ_i + r - i attached to a partition; strictly decreasing.
struct DegreeVector {
    std::vector<int> entries;
    std::string to_text() const;
};

/// One box added or removed: `larger`/`smaller` differ by the box in
/// 1-based row `row`, whose content is larger.parts[row] - row.
struct CoverStep {
    Partition larger;
    Partition smaller;
    int row = 0;
    int content = 0;
};

/// Skew shape larger/smaller that is edge-connected with no 2x2 square.
/// height = (rows occupied) - 1.
struct BorderStrip {
    Partition larger;
    Partition smaller;
    int size_k = 0;
    int height = 0;
};

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

DegreeVector degree_vector(const Partition& p);
/// Inverse of degree_vector: λ_i = n_i - r + i.  Used to check round trips.
Partition partition_from_degree_vector(const DegreeVector& dv);

/// All μ ⋖ λ, one step per removable box, ordered by row.  Throws
/// EmptyPartition when λ is empty.
std::vector<CoverStep> covers_down(const Partition& p);
/// All λ ⋗ μ, ordered by the row of the added box.
std::vector<CoverStep> covers_up(const Partition& p);

/// All μ with λ/μ a border strip of size k, and the dual direction.
std::vector<BorderStrip> border_strips_down(const Partition& p, int k);
std::vector<BorderStrip> border_strips_up(const Partition& p, int k);

/// Number of paths from ∅ to λ in the Young lattice (= number of standard
/// Young tableaux), via the degree-vector formula
/// |λ|!·Π_{i<j}(n_i-n_j) / Π_i n_i! with the division checked exact.
Int f_count(const Partition& p);

/// Same count by dynamic programming over the lattice (F_λ = Σ_{μ⋖λ} F_μ).
/// Independent of f_count; throws OracleBoundExceeded above the bound.
Int f_count_oracle(const Partition& p, int max_size = 12);

/// Componentwise (min, max) of the part sequences — lattice meet and join.
std::pair<Partition, Partition> meet_join(const Partition& a, const Partition& b);

Partition conjugate(const Partition& p);

} // namespace wlpoly
