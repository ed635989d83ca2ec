#pragma once

// `photonsplit` command-line driver. run() is callable in-process so tests can check
// output streams and exit codes without spawning the binary.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "photonsplit/amplitude_formula.hpp"
#include "photonsplit/asymptotics.hpp"
#include "photonsplit/classical_wave.hpp"
#include "photonsplit/format.hpp"
#include "photonsplit/operator_expansion.hpp"
#include "photonsplit/reference_tables.hpp"
#include "photonsplit/report.hpp"
#include "photonsplit/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace photonsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline void require_photons(int n, const char* what) {
    if (n < 0) throw UsageError(std::string(what) + " must be non-negative");
}

inline SplitterSpec parse_splitter(const std::string& text) {
    BigRational t2;
    try {
        t2 = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (t2 <= 0 || t2 >= 1) throw UsageError("--t2 must lie strictly between 0 and 1, got " + text);
    return SplitterSpec(t2);
}

}  // namespace detail

inline void cmd_dist(std::ostream& out, int n1, int n2, const std::string& t2_text, const std::string& format) {
    detail::require_photons(n1, "--n1");
    detail::require_photons(n2, "--n2");
    auto splitter = detail::parse_splitter(t2_text);
    auto dist = oracle_distribution({n1, n2}, splitter);
    if (format == "json") {
        out << distribution_json(dist).dump(2) << '\n';
    } else if (format == "csv") {
        write_distribution_csv(out, dist);
    } else {
        out << "input " << to_string(dist.input) << "  t2 = " << rational_to_string(splitter.t2()) << '\n';
        out << detail::pad("(N1,N2|", 10) << detail::pad("p", 24) << "p_float\n";
        for (const auto& r : records(dist)) {
            out << detail::pad("(" + std::to_string(r.N1) + "," + std::to_string(r.N2) + "|", 10)
                << detail::pad(r.p, 24) << r.p_float << '\n';
        }
    }
}

inline void cmd_table(std::ostream& out, int total, const std::string& format) {
    if (total < 1) throw UsageError("--total must be at least 1");
    const auto reference = reference_table(total);
    auto reference_for = [&](const FockInput& in) -> const ReferenceRow* {
        for (const auto& row : reference)
            if (row.input == in) return &row;
        return nullptr;
    };

    struct Cell {
        int N1;
        BigRational p;
        const BigRational* printed;
    };
    struct Row {
        FockInput input;
        std::vector<Cell> cells;
    };
    std::vector<Row> rows;
    for (int n1 = total; n1 >= 0; --n1) {
        FockInput in{n1, total - n1};
        auto dist = output_distribution(in);
        const ReferenceRow* ref = reference_for(in);
        Row row{in, {}};
        for (int N1 = 0; N1 <= total; ++N1)
            row.cells.push_back({N1, dist.at(N1), ref ? &ref->by_n1[static_cast<std::size_t>(N1)] : nullptr});
        rows.push_back(std::move(row));
    }
    auto deviates = [](const Cell& c) { return c.printed && *c.printed != c.p; };

    if (format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& c : row.cells) {
                nlohmann::json cell = {{"N1", c.N1},
                                       {"N2", total - c.N1},
                                       {"p", rational_to_string(c.p)},
                                       {"p_float", std::strtod(to_decimal_string(c.p).c_str(), nullptr)}};
                if (c.printed) {
                    cell["reference"] = rational_to_string(*c.printed);
                    cell["deviates"] = deviates(c);
                }
                cells.push_back(cell);
            }
            jrows.push_back({{"input", {{"n1", row.input.n1()}, {"n2", row.input.n2()}}}, {"outcomes", cells}});
        }
        nlohmann::json doc = {{"total", total}, {"splitter", {{"t2", "1/2"}}}, {"rows", jrows}, {"meta", meta_json()}};
        out << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << "n1,n2,N1,N2,p,p_float,reference,deviates\n";
        for (const auto& row : rows)
            for (const auto& c : row.cells) {
                out << row.input.n1() << ',' << row.input.n2() << ',' << c.N1 << ',' << total - c.N1 << ','
                    << rational_to_string(c.p) << ',' << to_decimal_string(c.p) << ','
                    << (c.printed ? rational_to_string(*c.printed) : "") << ',' << (deviates(c) ? "1" : "0") << '\n';
            }
        return;
    }

    const std::size_t width = 12;
    out << detail::pad("Input", width);
    for (int N1 = 0; N1 <= total; ++N1)
        out << detail::pad("(" + std::to_string(N1) + "," + std::to_string(total - N1) + "|", width);
    out << '\n';
    std::vector<std::string> footnotes;
    for (const auto& row : rows) {
        out << detail::pad(to_string(row.input), width);
        for (const auto& c : row.cells) {
            std::string text = rational_to_string(c.p);
            if (deviates(c)) {
                text += "*";
                std::string note = "* " + to_string(row.input) + " (" + std::to_string(c.N1) + "," +
                                   std::to_string(total - c.N1) + "|: printed reference value " +
                                   rational_to_string(*c.printed) + ", computed " + rational_to_string(c.p);
                if (find_misprint(row.input, c.N1)) note += " (documented misprint)";
                footnotes.push_back(note);
            }
            out << detail::pad(text, width);
        }
        out << '\n';
    }
    for (const auto& f : footnotes) out << f << '\n';
}

inline void cmd_symmetric(std::ostream& out, int n, const std::string& format, bool plot) {
    if (n < 1) throw UsageError("--n must be at least 1");
    struct Row {
        int m;
        BigRational p;
        std::optional<double> approx;
        std::optional<double> rel_error;
    };
    std::vector<Row> rows;
    for (int m = 0; m <= n; ++m) {
        Row row{m, symmetric_prob(n, m), std::nullopt, std::nullopt};
        if (m > 0 && m < n) {
            row.approx = arcsine_approx(n, m);
            row.rel_error = *row.approx / to_double(row.p) - 1;
        }
        rows.push_back(std::move(row));
    }

    if (plot) {
        out << "# m/n P(2m,2n-2m|n,n)\n";
        for (const auto& r : rows)
            out << std::setprecision(15) << static_cast<double>(r.m) / n << ' ' << to_decimal_string(r.p) << '\n';
        return;
    }
    if (format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"m", r.m},
                             {"N1", 2 * r.m},
                             {"N2", 2 * n - 2 * r.m},
                             {"p", rational_to_string(r.p)},
                             {"p_float", std::strtod(to_decimal_string(r.p).c_str(), nullptr)},
                             {"arcsine", r.approx ? nlohmann::json(*r.approx) : nlohmann::json(nullptr)},
                             {"rel_error", r.rel_error ? nlohmann::json(*r.rel_error) : nlohmann::json(nullptr)}});
        }
        out << nlohmann::json{{"n", n}, {"rows", jrows}, {"meta", meta_json()}}.dump(2) << '\n';
        return;
    }
    auto num = [](const std::optional<double>& v) {
        if (!v) return std::string();
        std::ostringstream os;
        os << std::setprecision(15) << *v;
        return os.str();
    };
    if (format == "csv") {
        out << "m,N1,N2,p,p_float,arcsine,rel_error\n";
        for (const auto& r : rows)
            out << r.m << ',' << 2 * r.m << ',' << 2 * n - 2 * r.m << ',' << rational_to_string(r.p) << ','
                << to_decimal_string(r.p) << ',' << num(r.approx) << ',' << num(r.rel_error) << '\n';
        return;
    }
    out << "input |" << n << "," << n << ">  (odd outcomes have probability 0)\n";
    out << detail::pad("m", 6) << detail::pad("(N1,N2|", 12) << detail::pad("p", 22) << detail::pad("p_float", 24)
        << detail::pad("arcsine", 24) << "rel_error\n";
    for (const auto& r : rows) {
        std::string p = rational_to_string(r.p);
        if (p.size() > 21) p = "(exact, see csv/json)";
        out << detail::pad(std::to_string(r.m), 6)
            << detail::pad("(" + std::to_string(2 * r.m) + "," + std::to_string(2 * n - 2 * r.m) + "|", 12)
            << detail::pad(p, 22) << detail::pad(to_decimal_string(r.p), 24)
            << detail::pad(r.approx ? num(r.approx) : "-", 24) << (r.rel_error ? num(r.rel_error) : "-") << '\n';
    }
}

inline void cmd_mz(std::ostream& out, const std::string& r2_text, double phase_diff, const std::string& format,
                   bool scan, double step) {
    BigRational r2_exact;
    try {
        r2_exact = parse_rational(r2_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (r2_exact <= 0 || r2_exact >= 1) throw UsageError("--r2 must lie strictly between 0 and 1, got " + r2_text);
    if (!std::isfinite(phase_diff)) throw UsageError("--phase-diff must be finite");
    const double r2 = to_double(r2_exact);

    auto fmt = [](double v) {
        std::ostringstream os;
        os << std::setprecision(15) << v;
        return os.str();
    };

    if (scan) {
        if (!(step > 0 && step <= 360)) throw UsageError("--step must lie in (0, 360]");
        double cells = 360.0 / step;
        if (std::abs(cells - std::nearbyint(cells)) > 1e-9) throw UsageError("--step must divide 360");
        const int n = static_cast<int>(std::nearbyint(cells));
        auto lossless = classical::lossless_phase_scan(r2, step);
        if (format == "json") {
            nlohmann::json pts = nlohmann::json::array();
            for (int j = 0; j <= n; ++j) {
                auto I = classical::mz_intensities({r2, 0, j * step});
                pts.push_back({j * step, I.i1 + I.i2});
            }
            out << nlohmann::json{{"r2", rational_to_string(r2_exact)},
                                  {"scan", pts},
                                  {"lossless_phase_diffs", lossless},
                                  {"meta", meta_json()}}
                       .dump(2)
                << '\n';
            return;
        }
        const char sep = format == "csv" ? ',' : ' ';
        out << (format == "csv" ? "" : "# ") << "phase_diff_deg" << sep << "I1_plus_I2\n";
        for (int j = 0; j <= n; ++j) {
            auto I = classical::mz_intensities({r2, 0, j * step});
            out << fmt(j * step) << sep << fmt(I.i1 + I.i2) << '\n';
        }
        if (format != "csv") {
            out << "# lossless at:";
            for (double d : lossless) out << ' ' << fmt(d);
            out << '\n';
        }
        return;
    }

    auto I = classical::mz_intensities({r2, 0, phase_diff});
    if (format == "json") {
        out << nlohmann::json{{"r2", rational_to_string(r2_exact)},
                              {"phase_diff_deg", phase_diff},
                              {"I1", I.i1},
                              {"I2", I.i2},
                              {"residual", I.residual},
                              {"conserves", I.conserves},
                              {"meta", meta_json()}}
                   .dump(2)
            << '\n';
    } else if (format == "csv") {
        out << "r2,phase_diff_deg,I1,I2,residual,conserves\n"
            << rational_to_string(r2_exact) << ',' << fmt(phase_diff) << ',' << fmt(I.i1) << ',' << fmt(I.i2) << ','
            << fmt(I.residual) << ',' << (I.conserves ? "1" : "0") << '\n';
    } else {
        out << "r2 = " << rational_to_string(r2_exact) << ", phi_t - phi_r = " << fmt(phase_diff) << " deg\n"
            << "I1 = " << fmt(I.i1) << "\nI2 = " << fmt(I.i2) << "\nresidual I1 + I2 - 1 = " << fmt(I.residual)
            << (I.conserves ? "" : "  (energy not conserved)") << '\n';
    }
}

inline int cmd_verify(std::ostream& out, const std::string& suite, const std::string& format) {
    std::vector<verify::SuiteReport> reports;
    try {
        reports = verify::run_suites(suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed();

    if (format == "json") {
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            suites.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", checks}, {"notices", r.notices}});
        }
        out << nlohmann::json{{"suites", suites}, {"passed", all_passed}, {"meta", meta_json()}}.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << "== " << r.name << '\n';
            for (const auto& c : r.checks) {
                out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.passed && !c.detail.empty()) out << " -- " << c.detail;
                out << '\n';
            }
            for (const auto& n : r.notices) out << "  note: " << n << '\n';
        }
        out << (all_passed ? "all checks passed" : "verification FAILED") << '\n';
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

/// Parses args (args[0] is the program name) and dispatches to a subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact photon-number statistics of Fock-state beams at lossless beam splitters", "photonsplit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string format = "table";
    std::string output_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--output", output_path, "Write output to this file instead of standard output");

    int dist_n1 = 0, dist_n2 = 0;
    std::string dist_t2 = "1/2";
    auto* dist = app.add_subcommand("dist", "Output distribution for one input (operator-expansion path)");
    dist->add_option("--n1", dist_n1, "Photons in input port 1")->required();
    dist->add_option("--n2", dist_n2, "Photons in input port 2")->required();
    dist->add_option("--t2", dist_t2, "Transmittance as p/q or integer")->capture_default_str();

    int table_total = 0;
    auto* table = app.add_subcommand("table", "Input x outcome probability matrix for a fixed total photon number");
    table->add_option("--total", table_total, "Total number of input photons")->required();

    int sym_n = 0;
    bool sym_plot = false;
    auto* symmetric = app.add_subcommand("symmetric", "Equal input beams: exact probabilities and arcsine limit");
    symmetric->add_option("--n", sym_n, "Photons per input beam")->required();
    symmetric->add_flag("--plot", sym_plot, "Emit plain two-column m/n vs probability data");

    std::string mz_r2;
    double mz_phase = 90;
    bool mz_scan = false;
    double mz_step = 0.5;
    auto* mz = app.add_subcommand("mz", "Classical Mach-Zehnder intensities and the lossless phase condition");
    mz->add_option("--r2", mz_r2, "Reflectance of both splitters, as p/q, integer or decimal")->required();
    mz->add_option("--phase-diff", mz_phase, "phi_t - phi_r in degrees")->capture_default_str();
    mz->add_flag("--scan", mz_scan, "Scan I1 + I2 over the phase difference");
    mz->add_option("--step", mz_step, "Scan grid step in degrees (must divide 360)")->capture_default_str();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
    verify_cmd->add_option("suite", suite, "tables, oracle-equivalence, symmetric, asymptotics, classical, or all")
        ->capture_default_str();

    for (auto* sub : {dist, table, symmetric, mz, verify_cmd}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "photonsplit: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (dist->parsed()) {
            cmd_dist(buffer, dist_n1, dist_n2, dist_t2, format);
        } else if (table->parsed()) {
            cmd_table(buffer, table_total, format);
        } else if (symmetric->parsed()) {
            cmd_symmetric(buffer, sym_n, format, sym_plot);
        } else if (mz->parsed()) {
            cmd_mz(buffer, mz_r2, mz_phase, format, mz_scan, mz_step);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(buffer, suite, format);
        }
    } catch (const UsageError& e) {
        err << "photonsplit: " << e.what() << '\n';
        return kExitUsage;
    }

    if (output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(output_path);
        if (!file) {
            err << "photonsplit: cannot open " << output_path << " for writing\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace photonsplit::cli
