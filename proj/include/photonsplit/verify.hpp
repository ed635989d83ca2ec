#pragma once

// Named invariant suites run by `photonsplit verify`.

#include "photonsplit/amplitude_formula.hpp"
#include "photonsplit/asymptotics.hpp"
#include "photonsplit/classical_wave.hpp"
#include "photonsplit/format.hpp"
#include "photonsplit/operator_expansion.hpp"
#include "photonsplit/reference_tables.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace photonsplit::verify {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    std::vector<std::string> notices;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

struct CheckState {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline void run(SuiteReport& report, std::string name, const std::function<void(CheckState&)>& body) {
    CheckState out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    report.checks.push_back({std::move(name), out.ok, out.detail});
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

}  // namespace detail

inline SuiteReport tables_suite() {
    SuiteReport report{"tables", {}, {}};
    for (int total : {2, 3, 4}) {
        detail::run(report, detail::cat("reference table, ", total, " photons"), [&](detail::CheckState& out) {
            for (const auto& row : reference_table(total)) {
                auto formula = output_distribution(row.input);
                auto oracle = oracle_distribution(row.input, SplitterSpec::balanced());
                if (formula.total() != 1) out.fail(detail::cat(to_string(row.input), " does not normalize"));
                for (int N1 = 0; N1 <= total; ++N1) {
                    const auto& p = formula.at(N1);
                    if (p != oracle.at(N1)) out.fail(detail::cat(to_string(row.input), " formula/oracle differ at N1=", N1));
                    if (p == row.by_n1[static_cast<std::size_t>(N1)]) continue;
                    auto misprint = find_misprint(row.input, N1);
                    if (misprint && misprint->printed == row.by_n1[static_cast<std::size_t>(N1)] && misprint->corrected == p) {
                        report.notices.push_back(detail::cat("documented misprint: ", to_string(row.input), " at (", N1, ",",
                                                             total - N1, "| printed ", misprint->printed, ", computed ", p));
                    } else {
                        out.fail(detail::cat(to_string(row.input), " at N1=", N1, ": printed ",
                                             row.by_n1[static_cast<std::size_t>(N1)], ", computed ", p));
                    }
                }
            }
        });
    }
    return report;
}

inline SuiteReport oracle_equivalence_suite() {
    SuiteReport report{"oracle-equivalence", {}, {}};
    detail::run(report, "formula equals operator expansion, n1+n2 <= 12", [](detail::CheckState& out) {
        for (int n = 0; n <= 12; ++n)
            for (int n1 = 0; n1 <= n; ++n1) {
                FockInput in{n1, n - n1};
                if (output_distribution(in).entries != oracle_distribution(in, SplitterSpec::balanced()).entries)
                    out.fail(detail::cat("mismatch at ", to_string(in)));
            }
    });
    detail::run(report, "unitarity, n1+n2 <= 12, t2 in {1/2, 1/3, 9/10}", [](detail::CheckState& out) {
        for (auto t2 : {BigRational(1, 2), BigRational(1, 3), BigRational(9, 10)})
            for (int n = 0; n <= 12; ++n)
                for (int n1 = 0; n1 <= n; ++n1) {
                    FockInput in{n1, n - n1};
                    if (oracle_distribution(in, SplitterSpec(t2)).total() != 1)
                        out.fail(detail::cat(to_string(in), " at t2=", t2, " does not sum to 1"));
                }
    });
    detail::run(report, "mean linearity, n1+n2 <= 10", [](detail::CheckState& out) {
        for (auto t2 : {BigRational(1, 2), BigRational(1, 3), BigRational(9, 10)})
            for (int n = 0; n <= 10; ++n)
                for (int n1 = 0; n1 <= n; ++n1) {
                    FockInput in{n1, n - n1};
                    SplitterSpec s(t2);
                    auto [m1, m2] = mean_output(in, s);
                    if (m1 != s.t2() * n1 + s.r2() * (n - n1) || m2 != s.r2() * n1 + s.t2() * (n - n1))
                        out.fail(detail::cat(to_string(in), " at t2=", t2));
                }
    });
    detail::run(report, "radical commonality identity, n1+n2 <= 16", [](detail::CheckState& out) {
        for (int n = 0; n <= 16; ++n)
            for (int n1 = 0; n1 <= n; ++n1) {
                int n2 = n - n1;
                for (int N1 = 0; N1 <= n; ++N1)
                    for (int k = 0; k <= N1; ++k) {
                        int N2 = n - N1;
                        BigInt lhs = binomial(n1, k) * binomial(n2, N1 - k) * binomial(N1, k) * binomial(N2, n1 - k);
                        BigInt c = binomial(n1, k) * binomial(n2, N1 - k);
                        BigInt rhs_num = c * c * factorial(N1) * factorial(N2);
                        BigInt rhs_den = factorial(n1) * factorial(n2);
                        if (lhs * rhs_den != rhs_num) out.fail(detail::cat("n1=", n1, " n2=", n2, " N1=", N1, " k=", k));
                    }
            }
    });
    detail::run(report, "normalization, mirror symmetry, single-beam reduction, n1+n2 <= 16", [](detail::CheckState& out) {
        for (int n = 0; n <= 16; ++n)
            for (int n1 = 0; n1 <= n; ++n1) {
                FockInput in{n1, n - n1};
                auto d = output_distribution(in);
                auto mirror = output_distribution(in.mirrored());
                if (d.total() != 1) out.fail(detail::cat(to_string(in), " does not normalize"));
                for (int N1 = 0; N1 <= n; ++N1) {
                    if (d.at(N1) != mirror.at(n - N1)) out.fail(detail::cat(to_string(in), " mirror at N1=", N1));
                    if (n1 == n && d.at(N1) != single_beam_prob(n, N1))
                        out.fail(detail::cat(to_string(in), " single-beam at N1=", N1));
                }
            }
    });
    return report;
}

inline SuiteReport symmetric_suite() {
    SuiteReport report{"symmetric", {}, {}};
    detail::run(report, "odd outcomes vanish for equal beams, n <= 10", [](detail::CheckState& out) {
        for (int n = 0; n <= 10; ++n) {
            auto d = output_distribution({n, n});
            for (int N1 = 1; N1 <= 2 * n; N1 += 2)
                if (d.at(N1) != 0) out.fail(detail::cat("n=", n, " N1=", N1));
        }
    });
    detail::run(report, "collapsed amplitude matches the full sum, n <= 10", [](detail::CheckState& out) {
        for (int n = 0; n <= 10; ++n) {
            auto d = output_distribution({n, n});
            for (int m = 0; m <= n; ++m) {
                if (symmetric_amplitude(n, m).norm() != d.at(2 * m)) out.fail(detail::cat("n=", n, " m=", m));
                if (symmetric_prob(n, m) != d.at(2 * m)) out.fail(detail::cat("prob n=", n, " m=", m));
            }
        }
    });
    detail::run(report, "bunching probability and C(2n,n) enhancement, n <= 8", [](detail::CheckState& out) {
        for (int n = 1; n <= 8; ++n) {
            auto d = output_distribution({n, n});
            auto b = bunching_prob(n);
            if (d.at(0) != b || d.at(2 * n) != b) out.fail(detail::cat("bunching n=", n));
            if (b / single_beam_prob(2 * n, 0) != BigRational(binomial(2 * n, n))) out.fail(detail::cat("ratio n=", n));
        }
    });
    detail::run(report, "mean photon number (n1+n2)/2, n1+n2 <= 12", [](detail::CheckState& out) {
        for (int n = 0; n <= 12; ++n)
            for (int n1 = 0; n1 <= n; ++n1)
                if (output_distribution({n1, n - n1}).mean_n1() != BigRational(n, 2))
                    out.fail(detail::cat("n1=", n1, " n2=", n - n1));
    });
    return report;
}

inline SuiteReport asymptotics_suite() {
    SuiteReport report{"asymptotics", {}, {}};
    detail::run(report, "Stirling underestimates with relative error < 1/(8n), 1 <= n <= 170", [](detail::CheckState& out) {
        for (int n = 1; n <= 170; ++n) {
            double rel = 1 - stirling(n) / to_double(BigRational(factorial(n)));
            if (!(rel > 0 && rel < 1.0 / (8 * n))) out.fail(detail::cat("n=", n, " rel=", rel));
        }
    });
    detail::run(report, "peak approximant halves at eps = sqrt(2/n)", [](detail::CheckState& out) {
        for (int n : {3, 10, 100, 1000}) {
            double ratio = binom_peak_approx(n, std::sqrt(2.0 / n)) / binom_peak_approx(n, 0);
            if (std::abs(ratio - 0.5) > 1e-14) out.fail(detail::cat("n=", n, " ratio=", ratio));
        }
    });
    detail::run(report, "arcsine approximation within 2% at n = 100, 10 <= m <= 90", [](detail::CheckState& out) {
        for (int m = 10; m <= 90; ++m) {
            double exact = to_double(symmetric_prob(100, m));
            double rel = std::abs(arcsine_approx(100, m) / exact - 1);
            if (rel > 0.02) out.fail(detail::cat("m=", m, " rel=", rel));
        }
    });
    detail::run(report, "single-beam half-width within 15% of sqrt(2 ln2 / n), n in {200, 400}", [](detail::CheckState& out) {
        for (int n : {200, 400}) {
            double eps = dist_stats(output_distribution({n, 0})).half_width_epsilon;
            double expected = std::sqrt(2 * std::log(2.0) / n);
            if (std::abs(eps / expected - 1) > 0.15) out.fail(detail::cat("n=", n, " eps=", eps));
        }
    });
    detail::run(report, "equal-beam variance exceeds n at n = 50", [](detail::CheckState& out) {
        double var = dist_stats(output_distribution({50, 50})).variance;
        if (!(var > 50)) out.fail(detail::cat("variance=", var));
    });
    double sum = 0;
    for (int m = 1; m < 200; ++m) sum += arcsine_approx(200, m);
    report.notices.push_back(detail::cat("arcsine approximation summed over m = 1..199 at n = 200: ",
                                         to_decimal_string(BigRational(sum), 6)));
    report.notices.push_back(detail::cat("peak approximant half-width sqrt(2/n) at n = 400: ", std::sqrt(2.0 / 400),
                                         "; exact binomial half-width: ",
                                         dist_stats(output_distribution({400, 0})).half_width_epsilon));
    return report;
}

inline SuiteReport classical_suite() {
    SuiteReport report{"classical", {}, {}};
    detail::run(report, "classical split conserves energy (randomized)", [](detail::CheckState& out) {
        std::mt19937_64 rng(20031);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int i = 0; i < 1000; ++i) {
            classical::ClassicalField a1{{u(rng), u(rng)}}, a2{{u(rng), u(rng)}};
            auto [b1, b2] = classical::classical_split(a1, a2);
            double before = a1.photon_number() + a2.photon_number();
            double after = b1.photon_number() + b2.photon_number();
            if (std::abs(after - before) > 1e-12 * std::max(1.0, before)) out.fail(detail::cat("sample ", i));
        }
    });
    detail::run(report, "interferometer intensities satisfy the conservation identity (10^4 random)", [](detail::CheckState& out) {
        std::mt19937_64 rng(1717);
        std::uniform_real_distribution<double> r(0, 1), phase(-360, 360);
        for (int i = 0; i < 10000; ++i) {
            classical::MZConfig cfg{r(rng), phase(rng), phase(rng)};
            auto I = classical::mz_intensities(cfg);
            double r2 = cfg.r2, t2 = cfg.t2();
            double identity = I.i1 + I.i2 - (r2 + t2) * (r2 + t2) -
                              2 * r2 * t2 * (1 + std::cos(2 * classical::deg_to_rad(cfg.phase_diff_deg())));
            if (std::abs(identity) > 1e-12) out.fail(detail::cat("sample ", i, " residual ", identity));
        }
    });
    detail::run(report, "energy conserves only at +-90 degrees", [](detail::CheckState& out) {
        for (double r2 : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            auto hits = classical::lossless_phase_scan(r2, 0.5);
            if (hits.size() != 2 || std::abs(hits[0] - 90) > 1e-9 || std::abs(hits[1] - 270) > 1e-9)
                out.fail(detail::cat("r2=", r2));
        }
    });
    detail::run(report, "classical split mean equals quantum mean at t2 = 1/2", [](detail::CheckState& out) {
        for (int n = 0; n <= 10; ++n)
            for (int n1 = 0; n1 <= n; ++n1) {
                auto [A1, A2] = classical::classical_split(classical::ClassicalField::from_photons(n1),
                                                           classical::ClassicalField::from_photons(n - n1));
                auto [m1, m2] = mean_output({n1, n - n1}, SplitterSpec::balanced());
                if (std::abs(A1.photon_number() - to_double(m1)) > 1e-12 ||
                    std::abs(A2.photon_number() - to_double(m2)) > 1e-12)
                    out.fail(detail::cat("n1=", n1, " n2=", n - n1));
            }
    });
    detail::run(report, "single-photon interferometer matches classical intensities", [](detail::CheckState& out) {
        for (auto r2 : {BigRational(1, 2), BigRational(1, 4), BigRational(1, 10), BigRational(2, 3)}) {
            SplitterSpec s(1 - r2);
            auto exact = mz_evolve({1, 0}, s, s, {0, 0}).exact_probabilities();
            if (!exact) {
                out.fail(detail::cat("no exact result at r2=", r2));
                continue;
            }
            BigRational t2 = 1 - r2;
            // cos 2(phi_t - phi_r) = -1 at the +-90 degree phase difference
            BigRational i1 = 4 * r2 * t2;
            BigRational i2 = r2 * r2 + t2 * t2 - 2 * r2 * t2;
            if (exact->at({1, 0}) != i1 || exact->at({0, 1}) != i2) out.fail(detail::cat("r2=", r2));
            auto I = classical::mz_intensities({to_double(r2), 90, 0});
            if (std::abs(I.i1 - to_double(i1)) > 1e-12 || std::abs(I.i2 - to_double(i2)) > 1e-12)
                out.fail(detail::cat("float mismatch r2=", r2));
        }
    });
    return report;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables", "oracle-equivalence", "symmetric", "asymptotics", "classical"};
    return names;
}

/// Runs one suite by name, or every suite for "all". Throws std::invalid_argument on unknown names.
inline std::vector<SuiteReport> run_suites(const std::string& which) {
    std::vector<SuiteReport> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    bool known = which == "all";
    for (const auto& n : suite_names()) known = known || n == which;
    if (!known) throw std::invalid_argument("unknown suite '" + which + "'");
    if (want("tables")) out.push_back(tables_suite());
    if (want("oracle-equivalence")) out.push_back(oracle_equivalence_suite());
    if (want("symmetric")) out.push_back(symmetric_suite());
    if (want("asymptotics")) out.push_back(asymptotics_suite());
    if (want("classical")) out.push_back(classical_suite());
    return out;
}

}  // namespace photonsplit::verify
