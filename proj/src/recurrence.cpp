#include "wlpoly/recurrence.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "wlpoly/errors.hpp"
#include "wlpoly/parallel.hpp"
#include "wlpoly/sequences.hpp"

namespace wlpoly {

namespace {

int permutation_sign(const std::vector<int>& sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] > sigma[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

MPoly signed_strip_sum(const RecurrenceTable& table,
                       const std::vector<BorderStrip>& strips) {
    MPoly sum;
    for (const auto& strip : strips) {
        const MPoly term = table.scaled(strip.smaller);
        if (strip.height % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

} // namespace

MPoly RecurrenceTable::compute_scaled(const Partition& p) const {
    if (p.empty()) return MPoly(1);
    const int n = p.size();
    MPoly acc;
    switch (family_) {
        case RecurrenceFamily::laguerre_thm1: {
            for (const CoverStep& step : covers_down(p))
                acc += (var_x() + var_alpha() - MPoly(step.content)) *
                       scaled(step.smaller);
            acc += var_x() * Rat(n - 1) *
                   signed_strip_sum(*this, border_strips_down(p, 2));
            break;
        }
        case RecurrenceFamily::hermite: {
            for (const CoverStep& step : covers_down(p))
                acc += var_x() * scaled(step.smaller);
            acc -= Rat(n - 1) *
                   signed_strip_sum(*this, border_strips_down(p, 2));
            break;
        }
        case RecurrenceFamily::laguerre_alt: {
            for (const CoverStep& step : covers_down(p))
                acc += (var_x() + var_alpha()) * scaled(step.smaller);
            MPoly strip_terms;
            for (int k = 2; k <= n; ++k) {
                const MPoly inner =
                    signed_strip_sum(*this, border_strips_down(p, k));
                if (inner.is_zero()) continue;
                const Rat weight = Rat(falling_factorial(n - 1, k - 1));
                if (k % 2 == 0)
                    strip_terms -= weight * inner;
                else
                    strip_terms += weight * inner;
            }
            acc += var_alpha() * strip_terms;
            break;
        }
    }
    return acc;
}

MPoly RecurrenceTable::scaled(const Partition& p) const {
    {
        std::scoped_lock lock(mu_);
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
    }
    MPoly value = compute_scaled(p);
    std::scoped_lock lock(mu_);
    return memo_.emplace(p, std::move(value)).first->second;
}

MPoly RecurrenceTable::normalized(const Partition& p) const {
    return exact_divide_integral(scaled(p), f_count(p));
}

void RecurrenceTable::materialize_up_to(int max_size, unsigned threads) const {
    // size-level barrier: everything a size depends on is already present
    for (int size = 0; size <= max_size; ++size) {
        const auto parts = partitions_of(size);
        parallel_for(parts.size(), threads,
                     [&](std::size_t i) { scaled(parts[i]); });
    }
}

const RecurrenceTable& thm1_table() {
    static RecurrenceTable table(RecurrenceFamily::laguerre_thm1);
    return table;
}

const RecurrenceTable& alt_table() {
    static RecurrenceTable table(RecurrenceFamily::laguerre_alt);
    return table;
}

const RecurrenceTable& hermite_table() {
    static RecurrenceTable table(RecurrenceFamily::hermite);
    return table;
}

MPoly wlp_thm1(const Partition& p) { return thm1_table().normalized(p); }
MPoly wlp_alt(const Partition& p) { return alt_table().normalized(p); }
MPoly whp_recurrence(const Partition& p) { return hermite_table().normalized(p); }

ProofDecomposition proof_decomposition(const Partition& p, int max_length) {
    if (p.empty()) throw EmptyPartition("proof_decomposition: empty partition");
    const int r = p.length();
    if (r > max_length)
        throw LengthBoundExceeded("proof_decomposition: length " +
                                  std::to_string(r) + " exceeds bound " +
                                  std::to_string(max_length));
    const auto n = degree_vector(p).entries;

    const int sign = (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
    const Rat prefactor = Rat(sign) * Rat(factorial(p.size() - 1));

    ProofDecomposition out;
    out.sign_prefactor = prefactor;

    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<int> shifted(r);
    do {
        const int sgn = permutation_sign(sigma);
        for (int j = 0; j < r; ++j) {
            // shifted[i] = σ(n[j+1])_i = n_i - δ_{i,j} - σ(i) + 1
            bool vanishes = false;
            for (int i = 0; i < r; ++i) {
                shifted[i] = n[i] - (i == j ? 1 : 0) - sigma[i] + 1;
                if (shifted[i] < 0) vanishes = true;
            }
            if (vanishes) continue; // 1/(negative!) kills the whole term

            Int denom(1);
            for (int e : shifted) denom *= factorial(e);
            const Rat base = Rat(sgn) / Rat(denom);

            MPoly product(1);
            for (int e : shifted) product *= modified_laguerre(e);

            // A: coefficient (x + a - λ_j + j) per the cover contents
            out.a += prefactor *
                     (var_x() + var_alpha() - MPoly(p.parts()[j] - (j + 1))) *
                     product * base;
            // B: weight σ(j) - r, no prefactor of its own
            if (sigma[j] != r)
                out.b += Rat(sigma[j] - r) * base * product;
            // C: j-th factor lowered once more, weight σ(n)_j - 1 = shifted[j]
            if (shifted[j] >= 1) {
                MPoly lowered(1);
                for (int i = 0; i < r; ++i)
                    lowered *= modified_laguerre(i == j ? shifted[i] - 1
                                                        : shifted[i]);
                out.c += Rat(shifted[j]) * base * lowered;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    out.c = var_x() * prefactor * out.c;
    return out;
}

TMapCheck verify_t_map(int r, const DegreeVector& dv) {
    if (r < 1 || static_cast<int>(dv.entries.size()) != r)
        throw std::invalid_argument("verify_t_map: degree vector length != r");
    const auto& n = dv.entries;
    TMapCheck out{true, true, true, true, 0};

    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 1);
    const auto shifted_vector = [&](const std::vector<int>& perm, int lowered) {
        std::vector<int> v(r);
        for (int i = 0; i < r; ++i)
            v[i] = n[i] - (i == lowered ? 1 : 0) - perm[i] + 1;
        return v;
    };
    do {
        for (int j = 0; j < r; ++j) {
            if (sigma[j] == r) continue;
            ++out.pairs;
            // k is the position mapped to σ(j)+1
            int k = -1;
            for (int i = 0; i < r; ++i) {
                if (sigma[i] == sigma[j] + 1) k = i;
            }
            std::vector<int> tau = sigma;
            std::swap(tau[j], tau[k]);

            if (permutation_sign(tau) != -permutation_sign(sigma))
                out.sign_flip = false;
            if (tau[k] != sigma[j]) out.value_match = false;
            if (shifted_vector(sigma, j) != shifted_vector(tau, k))
                out.vector_match = false;

            // apply T again from (k, tau)
            if (tau[k] == r) {
                out.involution = false;
            } else {
                int k2 = -1;
                for (int i = 0; i < r; ++i) {
                    if (tau[i] == tau[k] + 1) k2 = i;
                }
                std::vector<int> tau2 = tau;
                std::swap(tau2[k], tau2[k2]);
                if (k2 != j || tau2 != sigma) out.involution = false;
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace wlpoly
