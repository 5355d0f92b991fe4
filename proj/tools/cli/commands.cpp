#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "lifshitz/lifshitz.hpp"
#include "lifshitz/verification.hpp"
#include "report.hpp"

namespace lifshitz::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDualityTolerance = 1e-10;

bool is_z4(const BulkParams<double>& p) { return std::abs(p.z - 4.0) <= 1e-9; }

const char* extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

Json config_json(const RunConfig& c) {
    Json j = Json::object();
    j["subcommand"] = to_string(c.subcommand);
    for (const auto& [k, v] : c.echo()) j[k] = v;
    return j;
}

Json document(const RunConfig& c, Json results, Json flags, Json invariants) {
    Json doc = Json::object();
    doc["config"] = config_json(c);
    doc["results"] = std::move(results);
    doc["flags"] = std::move(flags);
    doc["invariants"] = std::move(invariants);
    return doc;
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

/// One-row table from ordered (name, value) pairs plus a flags column.
std::string single_row_csv(const RunConfig& c, const std::vector<std::pair<std::string, double>>& values,
                           const std::vector<std::string>& flags) {
    Table t;
    std::vector<std::string> row;
    for (const auto& [name, v] : values) {
        t.columns.push_back(name);
        row.push_back(csv_number(v));
    }
    t.columns.emplace_back("flags");
    row.push_back(join(flags, ';'));
    t.add_row(std::move(row));
    return dump_csv(c.echo(), t);
}

Rendered finish(const RunConfig& c, const std::string& stem, const std::vector<std::pair<std::string, double>>& values,
                const std::vector<std::string>& flags, Json invariants) {
    Rendered r;
    std::string content;
    if (c.format == OutputFormat::csv) {
        content = single_row_csv(c, values, flags);
    } else {
        Json results = Json::object();
        for (const auto& [name, v] : values) results[name] = v;
        content = dump_json(document(c, std::move(results), flags, std::move(invariants)));
    }
    r.artifacts.push_back({stem + extension(c.format), std::move(content)});
    return r;
}

Rendered render_boundary(const RunConfig& c) {
    const auto& p = c.boundary;
    const double analytic = xi_f_analytic(p);
    const auto fit = xi_f_from_fit(p, default_fit_samples(p.H));
    const auto gs = ground_state(p);
    const double residual = std::abs(fit.c_sq - analytic) / std::abs(analytic);
    Json inv = Json::object();
    inv["fit_residual_sq"] = fit.residual_sq;
    inv["fit_residual_amp"] = fit.residual_amp;
    inv["amplitude_to_squared_ratio"] = fit.c_amp / fit.c_sq;
    return finish(c, "boundary",
                  {{"xi_f_analytic", analytic},
                   {"xi_f_fitted", fit.c_sq},
                   {"residual", residual},
                   {"xi_f_fitted_amplitude", fit.c_amp},
                   {"ground_energy", gs.energy},
                   {"frequency", gs.frequency}},
                  {}, std::move(inv));
}

struct BulkValues {
    double v_exact = kNaN, v_exact_error = kNaN, v_series = kNaN, v_background = kNaN, regularized = kNaN;
    double xi_f_holo = kNaN, b1 = kNaN, b_minus2 = kNaN;
};

BulkValues bulk_values(const RunConfig& c, const BulkParams<double>& p) {
    BulkValues v;
    const auto exact = volume_exact(p, c.r_inf, c.quadrature);
    v.v_exact = exact.value;
    v.v_exact_error = exact.error;
    v.v_background = background_volume(p, c.r_inf, c.quadrature).value;
    v.regularized = regularized_complexity(p, c.r_inf, c.quadrature);
    if (is_z4(p)) {
        const auto coeffs = series_coeffs_z4(p);
        v.b1 = coeffs.b1;
        v.b_minus2 = coeffs.b_minus2;
        // Matched cutoff: w = r+/r, so eps = r+/r_inf.
        if (coeffs.valid()) v.v_series = volume_series_z4(coeffs, p.r_plus, p.r_plus / c.r_inf).value;
        if (p.xi < 0 && p.Q != 0) v.xi_f_holo = xi_f_holo_z4(p);
    }
    return v;
}

Rendered render_bulk(const RunConfig& c) {
    const auto& p = c.bulk;
    const BulkValues v = bulk_values(c, p);
    double implied_z = kNaN;
    try {
        implied_z = lifshitz_exponent(p.Q, p.xi, p.Lambda);
    } catch (const SingularityError&) {
    }
    Json inv = Json::object();
    inv["blackening_at_horizon"] = blackening(p.r_plus, p);
    inv["volume_positive"] = v.v_exact > 0;
    inv["volume_quadrature_error"] = v.v_exact_error;
    return finish(c, "bulk",
                  {{"V_exact", v.v_exact},
                   {"V_series", v.v_series},
                   {"xi_f_holo", v.xi_f_holo},
                   {"V_background", v.v_background},
                   {"complexity_regularized", v.regularized},
                   {"b1", v.b1},
                   {"b_minus2", v.b_minus2},
                   {"z_from_couplings", implied_z}},
                  geometry_flags(p), std::move(inv));
}

Rendered render_match(const RunConfig& c) {
    const auto report = verify_duality(c.bulk);
    Json inv = Json::object();
    inv["residual_within_tolerance"] = report.residual <= kDualityTolerance;
    inv["tolerance"] = kDualityTolerance;
    return finish(c, "match",
                  {{"N", report.matched.N},
                   {"beta2_over_q", report.matched.beta2_over_q},
                   {"xi_f_bulk", report.xi_f_bulk},
                   {"xi_f_boundary", report.xi_f_boundary},
                   {"residual", report.residual}},
                  report.flags, std::move(inv));
}

struct SweepRow {
    std::vector<double> values;  // columns after index and axis
    std::vector<std::string> flags;
};

SweepRow sweep_point(const RunConfig& base, double x) {
    RunConfig c = base;
    c.set(base.sweep.key, x);
    const auto& p = c.bulk;
    const BulkValues v = bulk_values(c, p);
    double n = kNaN, b2q = kNaN, residual = kNaN;
    SweepRow row;
    row.flags = geometry_flags(p);
    if (is_z4(p) && p.xi < 0 && p.Q > 0) {
        const auto report = verify_duality(p);
        n = report.matched.N;
        b2q = report.matched.beta2_over_q;
        residual = report.residual;
        row.flags.insert(row.flags.end(), report.flags.begin(), report.flags.end());
    }
    row.values = {xi_f_analytic(c.boundary), v.xi_f_holo, n, b2q, residual, v.v_exact, v.v_series, v.v_background,
                  v.regularized};
    return row;
}

std::string monotonicity(const std::vector<double>& y) {
    if (std::any_of(y.begin(), y.end(), [](double v) { return !std::isfinite(v); })) return "n/a";
    bool dec = true, inc = true;
    for (std::size_t i = 1; i < y.size(); ++i) {
        dec = dec && y[i] < y[i - 1];
        inc = inc && y[i] > y[i - 1];
    }
    return dec ? "decreasing" : inc ? "increasing" : "non-monotone";
}

Rendered render_sweep(const RunConfig& c) {
    const auto xs = c.sweep.values();
    const std::size_t n = xs.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::string> errors(n);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = sweep_point(c, xs[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(c.workers, static_cast<unsigned>(n)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < n; ++i)
        if (!errors[i].empty())
            throw NumericalError("sweep point " + std::to_string(i) + " (" + c.sweep.key + "=" + format_number(xs[i]) +
                                 "): " + errors[i]);

    const auto columns = sweep_columns(c.sweep.key);
    std::set<std::string> flag_set;
    for (const auto& r : rows) flag_set.insert(r.flags.begin(), r.flags.end());
    const std::vector<std::string> flags(flag_set.begin(), flag_set.end());

    Rendered out;
    if (c.format == OutputFormat::csv) {
        Table t{columns, {}};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> cells{std::to_string(i), csv_number(xs[i])};
            for (double v : rows[i].values) cells.push_back(csv_number(v));
            t.add_row(std::move(cells));
        }
        out.artifacts.push_back({"sweep.csv", dump_csv(c.echo(), t)});
    } else {
        Json results = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            Json row = Json::object();
            row["index"] = i;
            row[columns[1]] = xs[i];
            for (std::size_t k = 0; k < rows[i].values.size(); ++k) row[columns[k + 2]] = rows[i].values[k];
            results.push_back(std::move(row));
        }
        std::vector<double> holo(n);
        for (std::size_t i = 0; i < n; ++i) holo[i] = rows[i].values[1];
        Json inv = Json::object();
        inv["rows"] = n;
        inv["xi_f_holo_monotonicity"] = monotonicity(holo);
        out.artifacts.push_back({"sweep.json", dump_json(document(c, std::move(results), flags, std::move(inv)))});
    }
    for (std::size_t k = 2; k < columns.size(); ++k) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = rows[i].values[k - 2];
        out.artifacts.push_back({"sweep_" + columns[k] + ".dat", dump_plot_data(columns[1], columns[k], xs, y)});
    }
    return out;
}

std::string fmt_e(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Rendered render_verify(const RunConfig& c) {
    const auto& ids = verify::check_ids();
    const auto known = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
    if (!c.only.empty() && !known(c.only)) throw ValidationError("unknown check id '" + c.only + "'");
    if (!c.inject_fault.empty() && !known(c.inject_fault))
        throw ValidationError("unknown check id '" + c.inject_fault + "'");

    const verify::CheckOptions options{c.inject_fault};
    std::vector<verify::CheckResult> results;
    if (c.only.empty()) results = verify::run_all(options);
    else results.push_back(verify::run_check(c.only, options));

    Rendered r;
    bool all = true;
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-6s %-10s %-10s %-9s %s\n", "check", "status", "measured", "threshold",
                  "seconds", "detail");
    r.console = line;
    Table t{{"check", "passed", "measured", "threshold", "time_limit", "detail"}, {}};
    Json results_json = Json::array();
    std::vector<std::string> failed;
    for (const auto& res : results) {
        all = all && res.passed;
        if (!res.passed) failed.push_back(res.id);
        std::snprintf(line, sizeof line, "%-28s %-6s %-10s %-10s %-9.2f %s\n", res.id.c_str(),
                      res.passed ? "PASS" : "FAIL", fmt_e(res.measured).c_str(), fmt_e(res.threshold).c_str(),
                      res.seconds, res.detail.c_str());
        r.console += line;
        // Timings are left out of the files so that reports stay reproducible.
        t.add_row({res.id, res.passed ? "true" : "false", csv_number(res.measured), csv_number(res.threshold),
                   csv_number(res.time_limit), res.detail});
        Json j = Json::object();
        j["check"] = res.id;
        j["description"] = res.description;
        j["passed"] = res.passed;
        j["measured"] = res.measured;
        j["threshold"] = res.threshold;
        j["time_limit"] = res.time_limit;
        j["detail"] = res.detail;
        results_json.push_back(std::move(j));
    }
    r.console += all ? "all checks passed\n" : std::to_string(failed.size()) + " check(s) failed\n";
    r.exit_code = all ? kExitOk : kExitNumerical;

    if (c.format == OutputFormat::csv) {
        r.artifacts.push_back({"verify.csv", dump_csv(c.echo(), t)});
    } else {
        Json inv = Json::object();
        inv["all_passed"] = all;
        inv["failed"] = failed;
        inv["inject_fault"] = c.inject_fault;
        r.artifacts.push_back({"verify.json", dump_json(document(c, std::move(results_json), Json::array(), inv))});
    }
    return r;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot write '" + path.string() + "'");
    f << content;
    if (!f) throw ValidationError("cannot write '" + path.string() + "'");
}

}  // namespace

std::vector<std::string> sweep_columns(const std::string& axis) {
    return {"index",    axis,       "xi_f_boundary", "xi_f_holo",   "N_match",         "beta2_over_q",
            "duality_residual", "V_exact", "V_series", "V_background", "xi_f_regularized"};
}

Rendered render(const RunConfig& config) {
    switch (config.subcommand) {
        case Subcommand::boundary: return render_boundary(config);
        case Subcommand::bulk: return render_bulk(config);
        case Subcommand::match: return render_match(config);
        case Subcommand::sweep: return render_sweep(config);
        case Subcommand::verify: return render_verify(config);
    }
    return {};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Rendered r = render(config);
        out << r.console;
        if (config.out) {
            std::error_code ec;
            std::filesystem::create_directories(*config.out, ec);
            if (ec) throw ValidationError("cannot create output directory '" + config.out->string() + "': " + ec.message());
            std::string cfg;
            for (const auto& [k, v] : config.echo()) cfg += k + "=" + v + "\n";
            r.artifacts.push_back({"run.cfg", cfg});
            for (const auto& a : r.artifacts) write_file(*config.out / a.name, a.content);
        } else if (config.subcommand != Subcommand::verify) {
            out << r.artifacts.front().content;
        }
        out.flush();
        return r.exit_code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace lifshitz::cli
