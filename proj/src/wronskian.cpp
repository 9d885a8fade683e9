#include "wlpoly/wronskian.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "wlpoly/errors.hpp"

namespace wlpoly {

namespace {

MPoly family_member(const WronskianRequest& req, int degree) {
    switch (req.kind) {
        case FamilyKind::modified_laguerre: {
            MPoly p = modified_laguerre(degree);
            if (req.alpha0) p = p.substitute(Var::alpha, MPoly(*req.alpha0));
            return p;
        }
        case FamilyKind::hermite:
            return hermite(degree);
        case FamilyKind::classical_laguerre: {
            MPoly p = classical_laguerre(degree);
            if (req.alpha0) p = p.substitute(Var::alpha, MPoly(*req.alpha0));
            return p;
        }
        case FamilyKind::modified_jacobi:
            if (!req.alpha0 || !req.beta0)
                throw std::invalid_argument(
                    "wronskian: modified_jacobi needs rational alpha and beta");
            return modified_jacobi(degree, *req.alpha0, *req.beta0);
        case FamilyKind::custom:
            if (!req.custom)
                throw std::invalid_argument(
                    "wronskian: custom family without an AppellSpec");
            return appell_from_coeffs(*req.custom, degree);
    }
    throw std::logic_error("wronskian: unknown family");
}

Int degree_vector_product(const DegreeVector& dv) {
    // Π_{i<j} (n_j - n_i); negative for r >= 2.
    Int prod(1);
    const auto& n = dv.entries;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) prod *= Int(n[j] - n[i]);
    }
    return prod;
}

} // namespace

PolyMatrix wronskian_matrix(const WronskianRequest& req) {
    const auto dv = degree_vector(req.partition);
    const int r = static_cast<int>(dv.entries.size());
    PolyMatrix m(r, r);
    for (int j = 0; j < r; ++j) m.at(0, j) = family_member(req, dv.entries[j]);
    for (int i = 1; i < r; ++i) {
        for (int j = 0; j < r; ++j) m.at(i, j) = m.at(i - 1, j).derivative_x();
    }
    return m;
}

MPoly wronskian_poly_uncached(const WronskianRequest& req) {
    if (req.kind == FamilyKind::classical_laguerre)
        throw std::invalid_argument(
            "wronskian_poly: classical family is not Appell-normalized; "
            "use wronskian_classical_monic");
    const MPoly det = determinant(wronskian_matrix(req));
    const Int prod = degree_vector_product(degree_vector(req.partition));
    const MPoly result = det.integer_coefficients()
                             ? exact_divide_integral(det, prod)
                             : det / Rat(prod);
    if (!result.is_monic_in_x(req.partition.size()))
        throw NonMonicResult("wronskian_poly: result is not monic of degree " +
                             std::to_string(req.partition.size()));
    return result;
}

MPoly wronskian_poly(const WronskianRequest& req) {
    const bool cacheable = !req.alpha0 && !req.beta0 &&
                           (req.kind == FamilyKind::modified_laguerre ||
                            req.kind == FamilyKind::hermite);
    if (!cacheable) return wronskian_poly_uncached(req);

    static std::mutex mu;
    static std::map<std::pair<int, Partition>, MPoly> cache;
    const std::pair<int, Partition> key{static_cast<int>(req.kind),
                                        req.partition};
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MPoly value = wronskian_poly_uncached(req);
    std::scoped_lock lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

MPoly wronskian_classical_monic(const Partition& p, std::optional<Rat> alpha0) {
    WronskianRequest req;
    req.kind = FamilyKind::classical_laguerre;
    req.partition = p;
    req.alpha0 = std::move(alpha0);
    const MPoly det = determinant(wronskian_matrix(req));
    if (det.is_zero())
        throw DegenerateLeadingCoefficient(
            "wronskian_classical_monic: Wronskian vanishes identically");
    const int expected = p.size();
    if (det.degree_x() != std::optional<int>(expected))
        throw DegenerateLeadingCoefficient(
            "wronskian_classical_monic: leading coefficient of x^" +
            std::to_string(expected) + " vanishes identically");
    const MPoly lead = det.coefficient_in_x(expected);
    if (!lead.is_constant())
        throw DegenerateLeadingCoefficient(
            "wronskian_classical_monic: leading coefficient is not a scalar");
    MPoly result = det * Rat(1 / lead.constant_value());
    if (!result.is_monic_in_x(expected))
        throw NonMonicResult("wronskian_classical_monic: rescale failed");
    return result;
}

} // namespace wlpoly
