#include "oscint/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oscint/catalog.hpp"
#include "oscint/closedform.hpp"
#include "oscint/errors.hpp"
#include "oscint/fourier.hpp"

namespace oscint {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& s)
{
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw UsageError("--format must be text, json or csv");
}

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

std::string fmt(double v, int digits)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fmt(cplx v, int digits, bool complex_valued)
{
    if (!complex_valued) return fmt(v.real(), digits);
    std::string s = fmt(v.real(), digits);
    s += v.imag() < 0 ? "-" : "+";
    s += fmt(std::abs(v.imag()), digits) + "i";
    return s;
}

// 15 significant digits; the JSON writer then prints the shortest round-trip form.
ojson jnum(double v)
{
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(fmt(v, 15).c_str(), nullptr);
}

ojson jvalue(cplx v, bool complex_valued)
{
    if (!complex_valued) return jnum(v.real());
    return ojson{{"re", jnum(v.real())}, {"im", jnum(v.imag())}};
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

double parse_double(const std::string& text, const std::string& what)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) throw UsageError("cannot parse " + what + " value '" + text + "'");
    return v;
}

ParamSet parse_params(const std::vector<std::string>& raw)
{
    ParamSet p;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        std::vector<double> values;
        std::stringstream rest(item.substr(eq + 1));
        std::string piece;
        while (std::getline(rest, piece, ',')) values.push_back(parse_double(piece, name));
        if (values.empty()) throw UsageError("--param " + name + " has no value");
        p.set(name, std::move(values));
    }
    return p;
}

std::string params_text(const ParamSet& p)
{
    std::string s;
    for (const auto& [name, values] : p.values()) {
        if (!s.empty()) s += ";";
        s += name + "=";
        for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + fmt(values[i], 15);
    }
    return s;
}

ojson params_json(const CatalogEntry& e, const ParamSet& p)
{
    ojson o = ojson::object();
    for (const auto& spec : e.params) {
        const auto& v = p.vec(spec.name);
        if (spec.kind == ParamKind::vector) {
            ojson a = ojson::array();
            for (double x : v) a.push_back(jnum(x));
            o[spec.name] = a;
        } else {
            o[spec.name] = jnum(v.front());
        }
    }
    return o;
}

const char* kind_name(ParamKind k)
{
    switch (k) {
    case ParamKind::real: return "real";
    case ParamKind::integer: return "integer";
    case ParamKind::vector: return "vector";
    }
    return "?";
}

double default_tol()
{
    const char* env = std::getenv("OSCINT_DEFAULT_TOL");
    if (!env || !*env) return default_tolerance;
    const double v = parse_double(env, "OSCINT_DEFAULT_TOL");
    if (!(v > 0.0)) throw UsageError("OSCINT_DEFAULT_TOL must be positive");
    return v;
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int cmd_list(Format format, std::ostream& out)
{
    const auto entries = list_entries();
    if (format == Format::json) {
        ojson arr = ojson::array();
        for (const auto& e : entries) {
            ojson params = ojson::array();
            for (const auto& p : e.params)
                params.push_back({{"name", p.name}, {"kind", kind_name(p.kind)}, {"range", p.range}});
            arr.push_back({{"id", e.id}, {"params", params}, {"reference", e.reference}});
        }
        out << arr.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "id,kind,params,reference\n";
        for (const auto& e : entries) {
            std::string names;
            for (const auto& p : e.params) names += (names.empty() ? "" : ";") + p.name;
            out << e.id << "," << to_string(e.kind) << "," << csv_quote(names) << "," << csv_quote(e.reference) << "\n";
        }
    } else {
        for (const auto& e : entries) {
            std::string names;
            for (const auto& p : e.params) names += (names.empty() ? "" : " ") + p.name;
            char line[128];
            std::snprintf(line, sizeof line, "%-18s %-12s %s", e.id.c_str(), to_string(e.kind),
                          names.empty() ? "-" : names.c_str());
            out << line << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const std::string& id, const std::vector<std::string>& raw, Format format, std::ostream& out)
{
    const auto& e = find_entry(id);
    const ParamSet p = complete_params(e, parse_params(raw));
    const cplx closed = e.closed_form(p);
    const cplx series = e.series_form(p, 1e-13);
    const double defect = std::abs(series - closed);
    const bool cv = e.complex_valued;

    if (format == Format::json) {
        ojson o{{"id", id},
                {"params", params_json(e, p)},
                {"closed", jvalue(closed, cv)},
                {"series", jvalue(series, cv)},
                {"series_defect", jnum(defect)}};
        out << o.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "id,params,closed,closed_im,series,series_im,series_defect\n";
        out << id << "," << csv_quote(params_text(p)) << "," << fmt(closed.real(), 15) << "," << fmt(closed.imag(), 15)
            << "," << fmt(series.real(), 15) << "," << fmt(series.imag(), 15) << "," << fmt(defect, 15) << "\n";
    } else {
        out << fmt(closed, 10, cv) << "\n";
        out << "  series " << fmt(series, 10, cv) << "  (|series - closed| = " << fmt(defect, 3) << ")\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Job {
    std::string id;
    ParamSet params;
};

ojson report_json(const VerificationReport& r)
{
    const auto& e = find_entry(r.id);
    return ojson{{"id", r.id},
                 {"params", params_json(e, r.params)},
                 {"closed", jvalue(r.closed, r.complex_valued)},
                 {"numeric", jvalue(r.numeric, r.complex_valued)},
                 {"abs_err", jnum(r.abs_err)},
                 {"rel_err", jnum(r.rel_err)},
                 {"pass", r.pass},
                 {"periods_used", r.periods_used},
                 {"function_evals", r.function_evals}};
}

std::vector<VerificationReport> run_jobs(const std::vector<Job>& jobs, double tol, int threads)
{
    std::vector<VerificationReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) reports[i] = verify(jobs[i].id, jobs[i].params, tol);
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    pool.clear();
    return reports;
}

int cmd_verify(const std::optional<std::string>& id, bool all, bool grid, const std::vector<std::string>& raw,
               std::optional<double> tol_flag, int jobs_flag, Format format, std::ostream& out)
{
    if (all == id.has_value()) throw UsageError("verify needs exactly one of an entry id or --all");
    if (all && !raw.empty()) throw UsageError("--param cannot be combined with --all");
    if (grid && !raw.empty()) throw UsageError("--param cannot be combined with --grid");
    if (jobs_flag < 1) throw UsageError("--jobs must be at least 1");
    const double tol = tol_flag ? *tol_flag : default_tol();
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");

    std::vector<Job> jobs;
    auto add_entry = [&](const CatalogEntry& e) {
        if (grid) {
            for (const auto& p : e.default_grid) jobs.push_back({e.id, p});
        } else {
            jobs.push_back({e.id, complete_params(e, parse_params(raw))});
        }
    };
    if (all) {
        for (const auto& info : list_entries()) add_entry(find_entry(info.id));
    } else {
        add_entry(find_entry(*id));
    }

    const auto reports = run_jobs(jobs, tol, jobs_flag);
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;

    if (format == Format::json) {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out << arr.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "id,params,closed,closed_im,numeric,numeric_im,abs_err,rel_err,pass,periods_used,function_evals\n";
        for (const auto& r : reports) {
            out << r.id << "," << csv_quote(params_text(r.params)) << "," << fmt(r.closed.real(), 15) << ","
                << fmt(r.closed.imag(), 15) << "," << fmt(r.numeric.real(), 15) << "," << fmt(r.numeric.imag(), 15)
                << "," << fmt(r.abs_err, 15) << "," << fmt(r.rel_err, 15) << "," << (r.pass ? "true" : "false")
                << "," << r.periods_used << "," << r.function_evals << "\n";
        }
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "PASS " : "FAIL ") << r.id;
            const std::string pt = params_text(r.params);
            if (!pt.empty()) out << " [" << pt << "]";
            out << "  closed " << fmt(r.closed, 10, r.complex_valued) << "  numeric "
                << fmt(r.numeric, 10, r.complex_valued) << "  abs_err " << fmt(r.abs_err, 3) << "  periods "
                << r.periods_used << "\n";
            if (!r.reason.empty()) out << "     " << r.reason << "\n";
        }
        out << passed << "/" << reports.size() << " passed (tol " << fmt(tol, 3) << ")\n";
    }
    return passed == reports.size() ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------------------
// fourier
// ---------------------------------------------------------------------------

std::optional<PeriodicEvaluator> builtin_signal(const std::string& name)
{
    if (name == "cos") return PeriodicEvaluator::real([](double t) { return std::cos(t); }, Parity::even);
    if (name == "sin") return PeriodicEvaluator::real([](double t) { return std::sin(t); }, Parity::odd);
    if (name == "neglogsin")
        return PeriodicEvaluator::real([](double t) { return -std::log(std::abs(std::sin(t / 2.0))); }, Parity::even,
                                       {0.0});
    if (name == "squarewave")
        return PeriodicEvaluator::real([](double t) { return std::sin(t) >= 0.0 ? 1.0 : -1.0; }, Parity::odd, {0.0, pi});
    if (name == "sawtooth")
        return PeriodicEvaluator::real([](double t) { return (pi - wrap_period(t)) / 2.0; }, Parity::odd, {0.0});
    return std::nullopt;
}

int cmd_fourier(const std::string& signal, int samples, int max_order, std::optional<double> lambda, bool force,
                Format format, std::ostream& out, std::ostream& err)
{
    const auto f = builtin_signal(signal);
    if (!f) throw UsageError("unknown signal '" + signal + "' (cos, sin, neglogsin, squarewave, sawtooth)");
    SamplingPlan plan;
    plan.sample_count = samples;
    plan.max_order = max_order;
    validate(plan);
    const FourierCoefficients c = estimate_coefficients(*f, plan);
    const double residual = residual_check(*f, c, 256);

    std::optional<double> I, J;
    if (lambda) {
        if (!(*lambda > 0.0)) throw UsageError("lambda must be positive");
        if (residual > residual_gate && !force) {
            throw UsageError("residual " + fmt(residual, 3) + " exceeds " + fmt(residual_gate, 3) +
                             "; the estimated table is too coarse for closed-form evaluation (use --force)");
        }
        I = fourier_I(c, *lambda).value.real();
        J = fourier_J(c, *lambda).value.real();
    }

    const int N = c.max_order();
    auto a_of = [&](int n) { return n == 0 ? 2.0 * c[0].real() : (c[n] + c[-n]).real(); };
    auto b_of = [&](int n) { return (cplx(0.0, 1.0) * (c[n] - c[-n])).real(); };

    if (format == Format::json) {
        ojson rows = ojson::array();
        for (int n = -N; n <= N; ++n) {
            ojson row{{"n", n}, {"re", jnum(c[n].real())}, {"im", jnum(c[n].imag())}};
            if (n >= 0) {
                row["a"] = jnum(a_of(n));
                row["b"] = jnum(b_of(n));
            }
            rows.push_back(row);
        }
        ojson o{{"signal", signal}, {"samples", samples}, {"max_order", N}, {"residual", jnum(residual)},
                {"coefficients", rows}};
        if (I) {
            o["lambda"] = jnum(*lambda);
            o["I"] = jnum(*I);
            o["J"] = jnum(*J);
        }
        out << o.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "n,re,im,a,b\n";
        for (int n = -N; n <= N; ++n) {
            out << n << "," << fmt(c[n].real(), 15) << "," << fmt(c[n].imag(), 15) << ",";
            if (n >= 0) out << fmt(a_of(n), 15) << "," << fmt(b_of(n), 15);
            else out << ",";
            out << "\n";
        }
        err << "residual " << fmt(residual, 15) << "\n";
        if (I) err << "I " << fmt(*I, 15) << "\nJ " << fmt(*J, 15) << "\n";
    } else {
        char line[160];
        std::snprintf(line, sizeof line, "%5s %17s %17s %17s %17s\n", "n", "re", "im", "a", "b");
        out << line;
        for (int n = -N; n <= N; ++n) {
            const std::string a = n >= 0 ? fmt(a_of(n), 10) : "";
            const std::string b = n >= 0 ? fmt(b_of(n), 10) : "";
            std::snprintf(line, sizeof line, "%5d %17s %17s %17s %17s\n", n, fmt(c[n].real(), 10).c_str(),
                          fmt(c[n].imag(), 10).c_str(), a.c_str(), b.c_str());
            out << line;
        }
        out << "residual " << fmt(residual, 3) << "\n";
        if (I) out << "I " << fmt(*I, 10) << "\nJ " << fmt(*J, 10) << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// plot-data
// ---------------------------------------------------------------------------

int cmd_plot(const std::string& id, const std::vector<std::string>& raw, int points, const std::string& range,
             std::ostream& out)
{
    const auto& e = find_entry(id);
    std::optional<std::pair<double, double>> r;
    if (!range.empty()) {
        const auto comma = range.find(',');
        if (comma == std::string::npos) throw UsageError("--range expects lo,hi");
        r = std::pair{parse_double(range.substr(0, comma), "range"), parse_double(range.substr(comma + 1), "range")};
    }
    const auto data = plot_data(id, parse_params(raw), points, r);
    out << (e.complex_valued ? "x,re,im\n" : "x,value\n");
    for (const auto& s : data) {
        out << fmt(s.x, 15) << "," << fmt(s.value.real(), 15);
        if (e.complex_valued) out << "," << fmt(s.value.imag(), 15);
        out << "\n";
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Half-line oscillatory integrals: closed forms, quadrature oracle, verification", "oscint"};
    app.require_subcommand(1);

    std::string format_s = "text";
    std::vector<std::string> raw_params;

    auto* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--format", format_s, "text, json or csv");

    std::string id;
    auto* eval = app.add_subcommand("eval", "Print the closed-form value of an entry");
    eval->add_option("id", id, "Entry id")->required();
    eval->add_option("--param", raw_params, "name=value (vectors as name=v1,v2)");
    eval->add_option("--format", format_s, "text, json or csv");

    std::optional<std::string> verify_id;
    bool all = false, grid = false;
    std::optional<double> tol;
    int jobs = 1;
    auto* ver = app.add_subcommand("verify", "Compare the quadrature oracle with the closed form");
    ver->add_option("id", verify_id, "Entry id");
    ver->add_flag("--all", all, "Every entry");
    ver->add_flag("--grid", grid, "Every point of the default grid instead of the first");
    ver->add_option("--param", raw_params, "name=value (vectors as name=v1,v2)");
    ver->add_option("--tol", tol, "Pass tolerance (absolute or relative, whichever is looser)");
    ver->add_option("--jobs", jobs, "Worker threads");
    ver->add_option("--format", format_s, "text, json or csv");

    std::string signal;
    int samples = 4096, max_order = 32;
    std::optional<double> lambda;
    bool force = false;
    auto* fou = app.add_subcommand("fourier", "Estimate Fourier coefficients of a built-in signal");
    fou->add_option("signal", signal, "cos, sin, neglogsin, squarewave or sawtooth")->required();
    fou->add_option("--samples", samples, "Sample count (power of two)");
    fou->add_option("--max-order", max_order, "Largest |n|");
    fou->add_option("--lambda", lambda, "Also evaluate I and J from the estimated table");
    fou->add_flag("--force", force, "Evaluate even when the residual check fails");
    fou->add_option("--format", format_s, "text, json or csv");

    int points = 2000;
    std::string range;
    auto* plot = app.add_subcommand("plot-data", "CSV samples of an entry's integrand");
    plot->add_option("id", id, "Entry id")->required();
    plot->add_option("--param", raw_params, "name=value (vectors as name=v1,v2)");
    plot->add_option("--points", points, "Number of samples");
    plot->add_option("--range", range, "lo,hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const Format format = parse_format(format_s);
        if (*list) return cmd_list(format, out);
        if (*eval) return cmd_eval(id, raw_params, format, out);
        if (*ver) return cmd_verify(verify_id, all, grid, raw_params, tol, jobs, format, out);
        if (*fou) return cmd_fourier(signal, samples, max_order, lambda, force, format, out, err);
        if (*plot) return cmd_plot(id, raw_params, points, range, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace oscint
