/**
 * wlpoly — compute Wronskian Laguerre/Hermite polynomials indexed by
 * integer partitions, verify the identities they satisfy, emit tables,
 * and benchmark the recurrence against the determinant evaluation.
 *
 * Subcommands: compute, verify, table, bench.  Machine output is
 * JSON-lines (verify, bench, table --format json) or CSV; all ordering is
 * canonical partition order regardless of thread count.
 *
 * Exit codes: 0 success, 2 bad input, 3 internal consistency failure,
 * 4 verify found a failing identity.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlpoly/identities.hpp"
#include "wlpoly/parallel.hpp"
#include "wlpoly/recurrence.hpp"
#include "wlpoly/wronskian.hpp"

using namespace wlpoly;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerifyFailed = 4;

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

struct CliConfig {
    std::string partition_text;
    std::string family = "laguerre";
    std::string method = "auto";
    std::string alpha = "symbolic";
    std::string beta;
    std::string format; // per-command default
    std::string identity;
    int max_size = -1; // -1: per-identity default
    unsigned threads = 1;
    bool no_timing = false;
    std::vector<std::string> samples;
};

std::optional<Rat> parse_alpha(const CliConfig& cfg) {
    if (cfg.alpha == "symbolic" || cfg.alpha.empty()) return std::nullopt;
    return rat_from_string(cfg.alpha);
}

// ---------------------------------------------------------------------------
// compute

MPoly compute_polynomial(const CliConfig& cfg, const Partition& p) {
    const std::optional<Rat> alpha = parse_alpha(cfg);
    std::string method = cfg.method;
    if (method == "auto") {
        method = (cfg.family == "classical" || cfg.family == "jacobi")
                     ? "wronskian"
                     : "recurrence";
    }

    const auto substituted = [&](MPoly poly) {
        if (alpha) poly = poly.substitute(Var::alpha, MPoly(*alpha));
        return poly;
    };

    if (cfg.family == "laguerre") {
        if (method == "recurrence") return substituted(wlp_thm1(p));
        if (method == "recurrence-alt") return substituted(wlp_alt(p));
        if (method == "wronskian") {
            WronskianRequest req;
            req.kind = FamilyKind::modified_laguerre;
            req.partition = p;
            req.alpha0 = alpha;
            return wronskian_poly(req);
        }
        throw CLI::ValidationError("unknown method '" + method + "'");
    }
    if (cfg.family == "hermite") {
        if (method == "recurrence") return whp_recurrence(p);
        if (method == "wronskian") {
            WronskianRequest req;
            req.kind = FamilyKind::hermite;
            req.partition = p;
            return wronskian_poly(req);
        }
        throw CLI::ValidationError(
            "method '" + method + "' is not available for the Hermite family");
    }
    if (cfg.family == "classical") {
        if (method != "wronskian")
            throw CLI::ValidationError(
                "the classical family has no generating recurrence here; "
                "use --method wronskian");
        return wronskian_classical_monic(p, alpha);
    }
    if (cfg.family == "jacobi") {
        if (method != "wronskian")
            throw CLI::ValidationError(
                "no recurrence of this shape exists for the Jacobi family; "
                "use --method wronskian");
        if (!alpha || cfg.beta.empty())
            throw CLI::ValidationError(
                "the Jacobi family requires rational --alpha and --beta");
        WronskianRequest req;
        req.kind = FamilyKind::modified_jacobi;
        req.partition = p;
        req.alpha0 = alpha;
        req.beta0 = rat_from_string(cfg.beta);
        return wronskian_poly(req);
    }
    throw CLI::ValidationError("unknown family '" + cfg.family + "'");
}

int run_compute(const CliConfig& cfg) {
    const Partition p = Partition::parse(cfg.partition_text);
    const MPoly poly = compute_polynomial(cfg, p);
    const std::string format = cfg.format.empty() ? "human" : cfg.format;
    if (format == "human")
        std::cout << poly.to_human() << "\n";
    else if (format == "json")
        std::cout << poly.to_json() << "\n";
    else if (format == "latex")
        std::cout << poly.to_latex() << "\n";
    else
        throw CLI::ValidationError("unknown format '" + format + "'");
    return 0;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport residual_report(const std::string& identity,
                                   const Partition& p, const MPoly& lhs,
                                   const MPoly& rhs, const Stopwatch& watch) {
    VerificationReport report;
    report.identity = identity;
    report.range = p.to_text();
    const MPoly residual = lhs - rhs;
    if (residual.is_zero()) {
        report.status = VerificationReport::Status::pass;
        report.witness_json = "null";
    } else {
        report.status = VerificationReport::Status::fail;
        ordered_json w;
        w["partition"] = ordered_json::parse(p.to_json_text());
        w["residual"] = ordered_json::parse(residual.to_json());
        report.witness_json = w.dump();
    }
    report.ms = watch.elapsed_ms();
    return report;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    }
    return out;
}

MPoly laguerre_oracle(const Partition& p) {
    WronskianRequest req;
    req.kind = FamilyKind::modified_laguerre;
    req.partition = p;
    return wronskian_poly(req);
}

MPoly hermite_oracle(const Partition& p) {
    WronskianRequest req;
    req.kind = FamilyKind::hermite;
    req.partition = p;
    return wronskian_poly(req);
}

std::vector<JacobiSample> resolve_samples(const CliConfig& cfg) {
    if (cfg.samples.empty()) return default_jacobi_samples();
    std::vector<JacobiSample> out;
    for (const std::string& text : cfg.samples) {
        const auto comma = text.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--sample expects 'alpha,beta'");
        out.push_back(JacobiSample{rat_from_string(text.substr(0, comma)),
                                   rat_from_string(text.substr(comma + 1))});
    }
    return out;
}

std::vector<VerificationReport> run_identity(const CliConfig& cfg,
                                             unsigned threads) {
    const auto defaulted = [&](int fallback) {
        return cfg.max_size >= 0 ? cfg.max_size : fallback;
    };
    const std::string& id = cfg.identity;
    std::vector<VerificationReport> reports;

    const auto sweep_partitions =
        [&](int max_size, const std::function<VerificationReport(const Partition&)>& check) {
            const auto parts = partitions_up_to(max_size);
            reports.resize(parts.size());
            parallel_for(parts.size(), threads,
                         [&](std::size_t i) { reports[i] = check(parts[i]); });
        };

    if (id == "thm1" || id == "alt" || id == "hermite") {
        const int max_size = defaulted(6);
        const RecurrenceTable& table = id == "thm1"  ? thm1_table()
                                       : id == "alt" ? alt_table()
                                                     : hermite_table();
        table.materialize_up_to(max_size); // size-by-size, then parallel reads
        sweep_partitions(max_size, [&](const Partition& p) {
            Stopwatch watch;
            const MPoly lhs = table.normalized(p);
            const MPoly rhs =
                id == "hermite" ? hermite_oracle(p) : laguerre_oracle(p);
            return residual_report(id, p, lhs, rhs, watch);
        });
    } else if (id == "average") {
        const int max_size = defaulted(6);
        thm1_table().materialize_up_to(max_size);
        reports.resize(max_size + 1);
        parallel_for(max_size + 1, threads,
                     [&](std::size_t n) { reports[n] = check_average(static_cast<int>(n)); });
    } else if (id == "content") {
        sweep_partitions(defaulted(10), check_content_transfer);
    } else if (id == "weighted-content") {
        sweep_partitions(defaulted(10), check_weighted_content_sum);
    } else if (id == "degree-vector") {
        sweep_partitions(defaulted(10), [](const Partition& p) {
            return check_degree_vector_identity(degree_vector(p));
        });
    } else if (id == "plancherel") {
        const int max_size = defaulted(10);
        reports.resize(max_size + 1);
        parallel_for(max_size + 1, threads, [&](std::size_t n) {
            reports[n] = plancherel_normalization(static_cast<int>(n));
        });
    } else if (id == "rectangle") {
        const int bound = std::max(1, defaulted(4));
        thm1_table().materialize_up_to(bound * bound);
        std::vector<std::pair<int, int>> sides;
        for (int n = 1; n <= bound; ++n) {
            for (int m = 1; m <= bound; ++m) sides.emplace_back(n, m);
        }
        reports.resize(sides.size());
        parallel_for(sides.size(), threads, [&](std::size_t i) {
            reports[i] = rectangle_duality(sides[i].first, sides[i].second);
        });
    } else if (id == "jacobi") {
        const int max_size = defaulted(3);
        const auto samples = resolve_samples(cfg);
        std::vector<Partition> parts;
        for (int n = 1; n <= max_size; ++n) {
            for (auto& p : partitions_of(n)) parts.push_back(std::move(p));
        }
        reports.resize(parts.size());
        parallel_for(parts.size(), threads, [&](std::size_t i) {
            reports[i] = jacobi_form_search(parts[i], samples);
        });
    } else if (id == "appell") {
        const int max_size = defaulted(8);
        for (const char* family : {"laguerre", "hermite"}) {
            const bool laguerre = std::string(family) == "laguerre";
            const auto member = [&](int n) {
                return laguerre ? modified_laguerre(n) : hermite(n);
            };
            std::vector<MPoly> z;
            for (int n = 0; n <= max_size; ++n)
                z.push_back(member(n).substitute(Var::x, MPoly(0)));
            AppellSpec spec;
            spec.kind = laguerre ? AppellSpec::Kind::modified_laguerre
                                 : AppellSpec::Kind::hermite;
            spec.c = c_from_z(z);
            for (int n = 0; n <= max_size; ++n) {
                Stopwatch watch;
                VerificationReport report;
                report.identity = "appell";
                report.range = std::string(family) + " n=" + std::to_string(n);
                const bool roundtrip = appell_from_coeffs(spec, n) == member(n);
                const bool derivative =
                    n == 0 || member(n).derivative_x() == Rat(n) * member(n - 1);
                if (roundtrip && derivative) {
                    report.status = VerificationReport::Status::pass;
                    report.witness_json = "null";
                } else {
                    report.status = VerificationReport::Status::fail;
                    ordered_json w;
                    w["family"] = family;
                    w["n"] = n;
                    w["roundtrip"] = roundtrip;
                    w["derivative"] = derivative;
                    report.witness_json = w.dump();
                }
                report.ms = watch.elapsed_ms();
                reports.push_back(std::move(report));
            }
        }
    } else if (id == "decomposition") {
        const int max_size = defaulted(6);
        thm1_table().materialize_up_to(max_size);
        std::vector<Partition> parts;
        for (const auto& p : partitions_up_to(max_size)) {
            if (!p.empty() && p.length() <= 5) parts.push_back(p);
        }
        reports.resize(parts.size());
        parallel_for(parts.size(), threads, [&](std::size_t i) {
            const Partition& p = parts[i];
            Stopwatch watch;
            const ProofDecomposition pd = proof_decomposition(p);
            MPoly cover_sum;
            for (const CoverStep& step : covers_down(p))
                cover_sum += (var_x() + var_alpha() - MPoly(step.content)) *
                             thm1_table().scaled(step.smaller);
            MPoly strip_sum;
            for (const BorderStrip& strip : border_strips_down(p, 2)) {
                const MPoly term = thm1_table().scaled(strip.smaller);
                if (strip.height % 2 == 0)
                    strip_sum += term;
                else
                    strip_sum -= term;
            }
            strip_sum = var_x() * Rat(p.size() - 1) * strip_sum;
            const MPoly total =
                pd.a + MPoly(pd.sign_prefactor) * pd.b + pd.c;

            VerificationReport report;
            report.identity = "decomposition";
            report.range = p.to_text();
            const bool ok = pd.b.is_zero() && pd.a == cover_sum &&
                            pd.c == strip_sum &&
                            total == thm1_table().scaled(p);
            if (ok) {
                report.status = VerificationReport::Status::pass;
                report.witness_json = "null";
            } else {
                report.status = VerificationReport::Status::fail;
                ordered_json w;
                w["partition"] = ordered_json::parse(p.to_json_text());
                w["b_zero"] = pd.b.is_zero();
                w["a_matches"] = pd.a == cover_sum;
                w["c_matches"] = pd.c == strip_sum;
                w["total_matches"] = total == thm1_table().scaled(p);
                report.witness_json = w.dump();
            }
            report.ms = watch.elapsed_ms();
            reports[i] = std::move(report);
        });
        // T-map pair cancellation, exhaustively per permutation-group size
        for (int r = 2; r <= 5; ++r) {
            Stopwatch watch;
            std::vector<int> staircase(r);
            for (int i = 0; i < r; ++i) staircase[i] = r - i;
            const auto check =
                verify_t_map(r, degree_vector(Partition(staircase)));
            VerificationReport report;
            report.identity = "decomposition";
            report.range = "t-map r=" + std::to_string(r);
            const bool ok = check.involution && check.sign_flip &&
                            check.value_match && check.vector_match;
            report.status = ok ? VerificationReport::Status::pass
                               : VerificationReport::Status::fail;
            if (ok) {
                report.witness_json = "null";
            } else {
                ordered_json w;
                w["r"] = r;
                w["involution"] = check.involution;
                w["sign_flip"] = check.sign_flip;
                report.witness_json = w.dump();
            }
            report.ms = watch.elapsed_ms();
            reports.push_back(std::move(report));
        }
    } else {
        throw CLI::ValidationError("unknown identity '" + id + "'");
    }
    return reports;
}

int run_verify(const CliConfig& cfg) {
    const unsigned threads = resolve_threads(cfg.threads);
    const auto reports = run_identity(cfg, threads);
    for (const auto& report : reports) {
        std::cout << report.to_json(!cfg.no_timing) << "\n";
        if (report.status == VerificationReport::Status::fail)
            return kExitVerifyFailed;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table

int run_table(const CliConfig& cfg) {
    const int max_size = cfg.max_size >= 0 ? cfg.max_size : 4;
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    const auto parts = partitions_up_to(max_size);

    std::vector<MPoly> polys(parts.size());
    const unsigned threads = resolve_threads(cfg.threads);
    // recurrence methods walk the lattice; fill smaller sizes first so the
    // parallel sweep only reads completed entries
    if (cfg.family == "laguerre" &&
        (cfg.method == "auto" || cfg.method == "recurrence"))
        thm1_table().materialize_up_to(max_size);
    else if (cfg.family == "laguerre" && cfg.method == "recurrence-alt")
        alt_table().materialize_up_to(max_size);
    else if (cfg.family == "hermite" &&
             (cfg.method == "auto" || cfg.method == "recurrence"))
        hermite_table().materialize_up_to(max_size);
    parallel_for(parts.size(), threads,
                 [&](std::size_t i) { polys[i] = compute_polynomial(cfg, parts[i]); });

    if (format == "csv") {
        std::cout << "partition,F,degree_vector,polynomial\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& p = parts[i];
            std::cout << '"' << p.to_text() << "\"," << f_count(p).get_str()
                      << ",\"" << degree_vector(p).to_text() << "\","
                      << polys[i].to_human() << "\n";
        }
    } else if (format == "json") {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& p = parts[i];
            ordered_json row;
            row["partition"] = ordered_json::parse(p.to_json_text());
            row["F"] = f_count(p).get_str();
            row["degree_vector"] =
                ordered_json::parse("[" + degree_vector(p).to_text() + "]");
            row["polynomial"] = ordered_json::parse(polys[i].to_json());
            std::cout << row.dump() << "\n";
        }
    } else if (format == "latex") {
        std::cout << "\\begin{tabular}{llll}\n"
                  << "$\\lambda$ & $F_\\lambda$ & $n_\\lambda$ & polynomial \\\\\n"
                  << "\\hline\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& p = parts[i];
            std::cout << "$(" << p.to_text() << ")$ & $"
                      << f_count(p).get_str() << "$ & $("
                      << degree_vector(p).to_text() << ")$ & $"
                      << polys[i].to_latex() << "$ \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
    } else {
        throw CLI::ValidationError("unknown table format '" + format + "'");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

int run_bench(const CliConfig& cfg) {
    const int max_size = cfg.max_size >= 0 ? cfg.max_size : 6;
    const std::string method = cfg.method == "auto" ? "all" : cfg.method;
    const unsigned threads = resolve_threads(cfg.threads);
    const bool run_recurrence = method == "all" || method == "recurrence";
    const bool run_wronskian = method == "all" || method == "wronskian";
    if (!run_recurrence && !run_wronskian)
        throw CLI::ValidationError("bench methods: all|recurrence|wronskian");

    RecurrenceTable table(RecurrenceFamily::laguerre_thm1);
    for (int size = 0; size <= max_size; ++size) {
        const auto parts = partitions_of(size);
        ordered_json row;
        row["size"] = size;
        row["partitions"] = parts.size();
        if (run_recurrence) {
            Stopwatch watch;
            table.materialize_up_to(size, threads);
            std::string all;
            for (const auto& p : parts) all += table.normalized(p).to_human();
            row["recurrence_ms"] = watch.elapsed_ms();
            row["recurrence_checksum"] = fnv1a_hex(all);
        }
        if (run_wronskian) {
            Stopwatch watch;
            std::vector<MPoly> polys(parts.size());
            parallel_for(parts.size(), threads, [&](std::size_t i) {
                WronskianRequest req;
                req.kind = FamilyKind::modified_laguerre;
                req.partition = parts[i];
                polys[i] = wronskian_poly_uncached(req);
            });
            std::string all;
            for (const auto& poly : polys) all += poly.to_human();
            row["wronskian_ms"] = watch.elapsed_ms();
            row["wronskian_checksum"] = fnv1a_hex(all);
        }
        if (cfg.no_timing) {
            if (row.contains("recurrence_ms")) row["recurrence_ms"] = 0;
            if (row.contains("wronskian_ms")) row["wronskian_ms"] = 0;
        }
        std::cout << row.dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wronskian Laguerre/Hermite polynomial toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;

    CLI::App* compute = app.add_subcommand(
        "compute", "Compute one Wronskian polynomial for a partition");
    compute->add_option("--partition", cfg.partition_text,
                        "Comma-separated parts, e.g. 3,1 (empty for the "
                        "empty partition)")
        ->required();
    compute->add_option("--family", cfg.family,
                        "laguerre|hermite|classical|jacobi");
    compute->add_option("--method", cfg.method,
                        "auto|recurrence|recurrence-alt|wronskian");
    compute->add_option("--alpha", cfg.alpha, "symbolic or a rational like 3/2");
    compute->add_option("--beta", cfg.beta, "rational (Jacobi only)");
    compute->add_option("--format", cfg.format, "human|json|latex");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run an identity check over a partition range");
    verify->add_option("--identity", cfg.identity,
                       "thm1|alt|hermite|average|content|weighted-content|"
                       "degree-vector|rectangle|jacobi|plancherel|appell|"
                       "decomposition")
        ->required();
    verify->add_option("--max-size", cfg.max_size, "sweep bound");
    verify->add_option("--threads", cfg.threads,
                       "worker threads (WLPOLY_THREADS overrides)");
    verify->add_flag("--no-timing", cfg.no_timing,
                     "report ms as 0 for byte-stable output");
    verify->add_option("--sample", cfg.samples,
                       "Jacobi parameter sample 'alpha,beta' (repeatable)");

    CLI::App* table = app.add_subcommand(
        "table", "Emit one row per partition: partition, F, degrees, polynomial");
    table->add_option("--max-size", cfg.max_size, "largest partition size");
    table->add_option("--family", cfg.family,
                      "laguerre|hermite|classical|jacobi");
    table->add_option("--method", cfg.method,
                      "auto|recurrence|recurrence-alt|wronskian");
    table->add_option("--alpha", cfg.alpha, "symbolic or a rational");
    table->add_option("--beta", cfg.beta, "rational (Jacobi only)");
    table->add_option("--format", cfg.format, "csv|json|latex");
    table->add_option("--threads", cfg.threads, "worker threads");

    CLI::App* bench = app.add_subcommand(
        "bench", "Time recurrence vs determinant evaluation per size");
    bench->add_option("--max-size", cfg.max_size, "largest partition size");
    bench->add_option("--method", cfg.method, "all|recurrence|wronskian");
    bench->add_option("--threads", cfg.threads, "worker threads");
    bench->add_flag("--no-timing", cfg.no_timing,
                    "report ms as 0 for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (compute->parsed()) return run_compute(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (table->parsed()) return run_table(cfg);
        if (bench->parsed()) return run_bench(cfg);
        return kExitBadInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const InexactDivision& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonMonicResult& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
