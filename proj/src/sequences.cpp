#include "wlpoly/sequences.hpp"

#include <functional>
#include <mutex>

#include "wlpoly/errors.hpp"

namespace wlpoly {

namespace {

struct FamilyCache {
    std::mutex mu;
    std::vector<MPoly> entries;
};

MPoly cached_member(FamilyCache& cache, int n, const char* name,
                    const std::function<MPoly(const std::vector<MPoly>&, int)>& step,
                    std::vector<MPoly> seeds) {
    if (n < 0)
        throw std::invalid_argument(std::string(name) + ": negative index");
    std::scoped_lock lock(cache.mu);
    if (cache.entries.empty()) cache.entries = std::move(seeds);
    while (static_cast<int>(cache.entries.size()) <= n) {
        const int m = static_cast<int>(cache.entries.size());
        cache.entries.push_back(step(cache.entries, m));
    }
    return cache.entries[n];
}

} // namespace

MPoly classical_laguerre(int n) {
    static FamilyCache cache;
    return cached_member(
        cache, n, "classical_laguerre",
        [](const std::vector<MPoly>& e, int m) {
            const MPoly lead = MPoly(2 * m - 1) + var_alpha() - var_x();
            const MPoly tail = MPoly(m - 1) + var_alpha();
            return (lead * e[m - 1] - tail * e[m - 2]) / Rat(m);
        },
        {MPoly(1), MPoly(-1) * var_x() + var_alpha() + MPoly(1)});
}

MPoly modified_laguerre(int n) {
    static FamilyCache cache;
    return cached_member(
        cache, n, "modified_laguerre",
        [](const std::vector<MPoly>& e, int m) {
            return (var_x() + var_alpha() - MPoly(m - 1)) * e[m - 1] +
                   var_x() * Rat(m - 1) * e[m - 2];
        },
        {MPoly(1), var_x() + var_alpha()});
}

MPoly hermite(int n) {
    static FamilyCache cache;
    return cached_member(
        cache, n, "hermite",
        [](const std::vector<MPoly>& e, int m) {
            return var_x() * e[m - 1] - Rat(m - 1) * e[m - 2];
        },
        {MPoly(1), var_x()});
}

MPoly modified_jacobi(int n, const Rat& alpha0, const Rat& beta0) {
    if (n < 0) throw std::invalid_argument("modified_jacobi: negative index");
    const Rat sum = alpha0 + beta0;
    const Rat diff = alpha0 - beta0;
    MPoly prev2;        // A_{-1} := 0; its weight (m-1) vanishes at m = 1
    MPoly prev(1);      // A_0
    for (int m = 1; m <= n; ++m) {
        const Rat divisor = sum - Rat(m - 1);
        if (divisor == 0)
            throw SingularParameter("modified_jacobi: alpha0+beta0-" +
                                    std::to_string(m) + "+1 vanishes");
        MPoly next = (MPoly(Rat(sum - Rat(2 * m - 2))) * var_x() + MPoly(diff)) * prev +
                     (var_x() * var_x() - MPoly(1)) * Rat(m - 1) * prev2;
        next /= divisor;
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

MPoly appell_from_coeffs(const AppellSpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("appell_from_coeffs: negative index");
    if (static_cast<int>(spec.c.size()) < n)
        throw InsufficientCoefficients(
            "appell_from_coeffs: need c_1..c_" + std::to_string(n) + ", have " +
            std::to_string(spec.c.size()));
    for (const MPoly& c : spec.c) {
        if (c.degree_in(Var::x) > 0)
            throw std::invalid_argument(
                "appell_from_coeffs: coefficient depends on x");
    }
    std::vector<MPoly> a;
    a.reserve(n + 1);
    a.emplace_back(1);
    for (int m = 1; m <= n; ++m) {
        MPoly next = var_x() * a[m - 1];
        for (int k = 1; k <= m; ++k)
            next += Rat(binomial(m - 1, k - 1)) * spec.c[k - 1] * a[m - k];
        a.push_back(std::move(next));
    }
    return a[n];
}

std::vector<MPoly> c_from_z(const std::vector<MPoly>& z) {
    if (z.empty() || z[0] != MPoly(1))
        throw BadNormalization("c_from_z: z_0 must be 1");
    const int top = static_cast<int>(z.size()) - 1;
    std::vector<MPoly> c(top);
    for (int n = 1; n <= top; ++n) {
        MPoly value = z[n];
        for (int i = 1; i <= n - 1; ++i)
            value -= Rat(binomial(n - 1, i)) * c[n - i - 1] * z[i];
        c[n - 1] = std::move(value);
    }
    return c;
}

} // namespace wlpoly
