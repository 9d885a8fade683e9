#include "wlpoly/identities.hpp"

#include <json.hpp>

#include <chrono>

#include "wlpoly/errors.hpp"
#include "wlpoly/recurrence.hpp"
#include "wlpoly/wronskian.hpp"

namespace wlpoly {

using ordered_json = nlohmann::ordered_json;

namespace {

class Stopwatch {
public:
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

VerificationReport make_report(std::string identity, std::string range,
                               VerificationReport::Status status,
                               ordered_json witness, const Stopwatch& watch) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.range = std::move(range);
    report.status = status;
    report.witness_json = witness.is_null() ? "null" : witness.dump();
    report.ms = watch.elapsed_ms();
    return report;
}

ordered_json residual_witness(const Partition& p, const MPoly& residual) {
    ordered_json w;
    w["partition"] = ordered_json::parse(p.to_json_text());
    w["residual"] = ordered_json::parse(residual.to_json());
    return w;
}

} // namespace

const char* VerificationReport::status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::infeasible_certificate: return "infeasible-certificate";
    }
    return "unknown";
}

std::string VerificationReport::to_json(bool include_timing) const {
    ordered_json j;
    j["identity"] = identity;
    j["range"] = range;
    j["status"] = status_name(status);
    j["witness"] = witness_json == "null" ? ordered_json(nullptr)
                                          : ordered_json::parse(witness_json);
    j["ms"] = include_timing ? ms : 0;
    return j.dump();
}

VerificationReport check_average(int n) {
    Stopwatch watch;
    const auto& table = thm1_table();
    MPoly lhs;
    for (const Partition& p : partitions_of(n))
        lhs += Rat(f_count(p)) * table.scaled(p); // F_λ · (F_λ l_λ)
    const MPoly rhs =
        MPoly(Rat(factorial(n))) * (var_x() + var_alpha()).pow(n);
    const MPoly residual = lhs - rhs;
    const std::string range = "n=" + std::to_string(n);
    if (residual.is_zero())
        return make_report("average", range, VerificationReport::Status::pass,
                           nullptr, watch);
    ordered_json w;
    w["n"] = n;
    w["residual"] = ordered_json::parse(residual.to_json());
    return make_report("average", range, VerificationReport::Status::fail, w,
                       watch);
}

VerificationReport check_content_transfer(const Partition& mu) {
    Stopwatch watch;
    long long up = 0, down = 0;
    for (const CoverStep& step : covers_up(mu)) up += step.content;
    if (!mu.empty()) {
        for (const CoverStep& step : covers_down(mu)) down += step.content;
    }
    const std::string range = mu.to_text();
    if (up == down)
        return make_report("content", range, VerificationReport::Status::pass,
                           nullptr, watch);
    ordered_json w;
    w["partition"] = ordered_json::parse(mu.to_json_text());
    w["up_sum"] = up;
    w["down_sum"] = down;
    return make_report("content", range, VerificationReport::Status::fail, w,
                       watch);
}

VerificationReport check_weighted_content_sum(const Partition& mu) {
    Stopwatch watch;
    Int sum(0);
    for (const CoverStep& step : covers_up(mu))
        sum += f_count(step.larger) * Int(step.content);
    const std::string range = mu.to_text();
    if (sum == 0)
        return make_report("weighted-content", range,
                           VerificationReport::Status::pass, nullptr, watch);
    ordered_json w;
    w["partition"] = ordered_json::parse(mu.to_json_text());
    w["sum"] = sum.get_str();
    return make_report("weighted-content", range,
                       VerificationReport::Status::fail, w, watch);
}

VerificationReport check_degree_vector_identity(const DegreeVector& dv) {
    Stopwatch watch;
    const auto& n = dv.entries;
    const int r = static_cast<int>(n.size());
    for (int k = 0; k < r; ++k) {
        if (n[k] + 1 == 0)
            throw ZeroDenominator("degree-vector identity: n_k + 1 = 0");
        for (int j = k + 1; j < r; ++j) {
            if (n[k] == n[j])
                throw ZeroDenominator("degree-vector identity: equal entries");
        }
    }
    Rat lhs(0);
    for (int k = 0; k < r; ++k) {
        Rat term = make_rat(Int(n[k] + 1 - r), Int(n[k] + 1));
        for (int j = 0; j < r; ++j) {
            if (j == k) continue;
            term *= make_rat(Int(n[k] + 1 - n[j]), Int(n[k] - n[j]));
        }
        lhs += term;
    }
    Rat rhs(r);
    for (int k = 0; k < r; ++k) rhs *= make_rat(Int(n[k]), Int(n[k] + 1));
    const std::string range = "n=(" + dv.to_text() + ")";
    if (lhs == rhs)
        return make_report("degree-vector", range,
                           VerificationReport::Status::pass, nullptr, watch);
    ordered_json w;
    w["degree_vector"] = ordered_json::parse("[" + dv.to_text() + "]");
    w["lhs"] = rat_to_string(lhs);
    w["rhs"] = rat_to_string(rhs);
    return make_report("degree-vector", range,
                       VerificationReport::Status::fail, w, watch);
}

VerificationReport rectangle_duality(int n, int m) {
    Stopwatch watch;
    if (n < 1 || m < 1)
        throw std::invalid_argument("rectangle_duality: sides must be >= 1");
    const Partition rect(std::vector<int>(m, n));       // m rows of n
    const Partition transposed(std::vector<int>(n, m)); // n rows of m
    const MPoly lhs = wronskian_classical_monic(rect);
    const MPoly rhs = wlp_thm1(transposed)
                          .substitute(Var::alpha, -var_alpha() - MPoly(n));
    const MPoly residual = lhs - rhs;
    const std::string range =
        std::to_string(n) + "x" + std::to_string(m) + " rectangle";
    if (residual.is_zero())
        return make_report("rectangle", range,
                           VerificationReport::Status::pass, nullptr, watch);
    return make_report("rectangle", range, VerificationReport::Status::fail,
                       residual_witness(rect, residual), watch);
}

VerificationReport plancherel_normalization(int n) {
    Stopwatch watch;
    Int sum(0);
    for (const Partition& p : partitions_of(n)) {
        const Int f = f_count(p);
        sum += f * f;
    }
    const Int expected = factorial(n);
    const std::string range = "n=" + std::to_string(n);
    if (sum == expected)
        return make_report("plancherel", range,
                           VerificationReport::Status::pass, nullptr, watch);
    ordered_json w;
    w["n"] = n;
    w["sum"] = sum.get_str();
    w["expected"] = expected.get_str();
    return make_report("plancherel", range, VerificationReport::Status::fail,
                       w, watch);
}

std::vector<JacobiSample> default_jacobi_samples() {
    return {
        {make_rat(1, 2), make_rat(1, 3)},
        {make_rat(2, 5), make_rat(1, 7)},
        {make_rat(3, 7), make_rat(-1, 5)},
    };
}

JacobiFormAnalysis jacobi_form_analysis(const Partition& p,
                                        const std::vector<JacobiSample>& samples) {
    if (p.empty())
        throw EmptyPartition("jacobi_form_analysis: empty partition");
    if (samples.empty())
        throw std::invalid_argument("jacobi_form_analysis: no samples");

    JacobiFormAnalysis out;
    out.partition = p;

    const auto covers = covers_down(p);
    const auto strips = border_strips_down(p, 2);
    for (const auto& step : covers) {
        out.unknown_names.push_back("a[" + step.smaller.to_text() + "]");
        out.unknown_names.push_back("b[" + step.smaller.to_text() + "]");
    }
    for (const auto& strip : strips) {
        const std::string t = strip.smaller.to_text();
        out.unknown_names.push_back("c[" + t + "]");
        out.unknown_names.push_back("d[" + t + "]");
        out.unknown_names.push_back("e[" + t + "]");
    }
    const std::size_t unknowns = out.unknown_names.size();
    const int degree = p.size();

    RatMatrix stacked_a;
    std::vector<Rat> stacked_b;

    out.solvable_per_sample = true;
    for (const JacobiSample& sample : samples) {
        WronskianRequest req;
        req.kind = FamilyKind::modified_jacobi;
        req.alpha0 = sample.alpha;
        req.beta0 = sample.beta;

        const auto member = [&](const Partition& q) {
            WronskianRequest r = req;
            r.partition = q;
            return wronskian_poly_uncached(r);
        };
        const auto x_coeff = [](const MPoly& poly, int power) {
            const MPoly c = poly.coefficient_in_x(power);
            if (!c.is_constant())
                throw std::logic_error(
                    "jacobi system: non-constant coefficient at fixed parameters");
            return c.constant_value();
        };

        const MPoly target = Rat(f_count(p)) * member(p);
        RatMatrix a(degree + 1, std::vector<Rat>(unknowns, Rat(0)));
        std::vector<Rat> b(degree + 1);
        for (int power = 0; power <= degree; ++power)
            b[power] = x_coeff(target, power);

        std::size_t col = 0;
        for (const auto& step : covers) {
            const MPoly base = Rat(f_count(step.smaller)) * member(step.smaller);
            const MPoly with_x = var_x() * base;
            for (int power = 0; power <= degree; ++power) {
                a[power][col] = x_coeff(with_x, power);
                a[power][col + 1] = x_coeff(base, power);
            }
            col += 2;
        }
        for (const auto& strip : strips) {
            const MPoly base =
                Rat(f_count(strip.smaller)) * member(strip.smaller);
            const MPoly with_x = var_x() * base;
            const MPoly with_x2 = var_x() * with_x;
            for (int power = 0; power <= degree; ++power) {
                a[power][col] = x_coeff(with_x2, power);
                a[power][col + 1] = x_coeff(with_x, power);
                a[power][col + 2] = x_coeff(base, power);
            }
            col += 3;
        }

        JacobiSampleOutcome outcome;
        outcome.sample = sample;
        outcome.solve = solve_linear(a, b);
        if (outcome.solve.kind == SolveKind::infeasible)
            out.solvable_per_sample = false;
        out.outcomes.push_back(std::move(outcome));

        for (auto& row : a) stacked_a.push_back(std::move(row));
        for (auto& v : b) stacked_b.push_back(std::move(v));
    }
    out.intersected = solve_linear(stacked_a, stacked_b);
    return out;
}

namespace {

ordered_json solve_to_json(const LinearSolveResult& solve) {
    ordered_json s;
    switch (solve.kind) {
        case SolveKind::unique:
        case SolveKind::underdetermined: {
            s["status"] = solve.kind == SolveKind::unique
                              ? "solvable"
                              : "solvable-underdetermined";
            ordered_json sol = ordered_json::array();
            for (const Rat& v : solve.solution) sol.push_back(rat_to_string(v));
            s["solution"] = std::move(sol);
            break;
        }
        case SolveKind::infeasible: {
            s["status"] = "infeasible";
            ordered_json cert = ordered_json::array();
            for (const Rat& v : solve.certificate)
                cert.push_back(rat_to_string(v));
            s["certificate"] = std::move(cert);
            s["certificate_value"] = rat_to_string(solve.certificate_value);
            break;
        }
    }
    return s;
}

} // namespace

VerificationReport jacobi_form_search(const Partition& p,
                                      const std::vector<JacobiSample>& samples) {
    Stopwatch watch;
    const JacobiFormAnalysis analysis = jacobi_form_analysis(p, samples);

    ordered_json detail;
    detail["partition"] = ordered_json::parse(p.to_json_text());
    detail["unknowns"] = analysis.unknown_names;
    detail["samples"] = ordered_json::array();
    for (const auto& outcome : analysis.outcomes) {
        ordered_json s;
        s["alpha"] = rat_to_string(outcome.sample.alpha);
        s["beta"] = rat_to_string(outcome.sample.beta);
        s.update(solve_to_json(outcome.solve));
        detail["samples"].push_back(std::move(s));
    }
    detail["per_sample_solvable"] = analysis.solvable_per_sample;
    detail["intersected"] = solve_to_json(analysis.intersected);

    const std::string range = p.to_text();
    const auto status =
        analysis.intersected.kind == SolveKind::infeasible
            ? VerificationReport::Status::infeasible_certificate
            : VerificationReport::Status::pass;
    return make_report("jacobi", range, status, detail, watch);
}

} // namespace wlpoly
