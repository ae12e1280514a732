#pragma once

// Registry of named integrals with exact values: each entry pairs a
// parameterized periodic integrand with its closed form, a Fourier or
// analytic series form, and a default verification grid.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oscint/core.hpp"
#include "oscint/oracle.hpp"

namespace oscint {

enum class IntegralKind { even_kernel, odd_kernel, tan_form, principal_value };

const char* to_string(IntegralKind k) noexcept;

enum class ParamKind { real, integer, vector };

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::real;
    std::string range;  // human-readable validity range
};

// Named parameter values; scalars are stored as one-element vectors.
class ParamSet {
public:
    ParamSet() = default;
    ParamSet(std::initializer_list<std::pair<const std::string, double>> scalars);

    ParamSet& set(const std::string& name, double value);
    ParamSet& set(const std::string& name, std::vector<double> values);

    bool has(const std::string& name) const { return values_.count(name) != 0; }

    // Throws ParameterError when missing or not a scalar.
    double real(const std::string& name) const;
    const std::vector<double>& vec(const std::string& name) const;

    const std::map<std::string, std::vector<double>>& values() const noexcept { return values_; }

    friend bool operator==(const ParamSet&, const ParamSet&) = default;

private:
    std::map<std::string, std::vector<double>> values_;
};

// One oracle-checked quantity of an entry.
struct ComponentSpec {
    std::string name;
    IntegralKind kind;
    cplx closed;
    std::function<QuadratureResult(const OracleConfig&)> oracle;
};

struct CatalogEntry {
    std::string id;
    std::vector<ParamSpec> params;
    IntegralKind kind;
    std::string reference;  // the identity, written out
    bool complex_valued = false;
    std::vector<ParamSet> default_grid;
    std::pair<double, double> plot_range{0.0, 20.0};

    std::function<void(const ParamSet&)> validate;
    std::function<cplx(const ParamSet&)> closed_form;
    std::function<cplx(const ParamSet&, double tol)> series_form;
    std::function<std::vector<ComponentSpec>(const ParamSet&)> components;
    // Headline numeric value from component values (default: the first).
    std::function<cplx(const std::vector<cplx>&)> combine;
    // The integrand as written in the identity, in its own variable.
    std::function<cplx(const ParamSet&, double)> plot_integrand;
};

struct EntryInfo {
    std::string id;
    std::vector<ParamSpec> params;
    IntegralKind kind;
    std::string reference;
};

// Sorted by id.
std::vector<EntryInfo> list_entries();

// Throws UnknownEntryError.
const CatalogEntry& find_entry(const std::string& id);

// Fills missing parameters from the first default-grid point, rejects
// unknown names and validates ranges (ParameterError).
ParamSet complete_params(const CatalogEntry& entry, const ParamSet& given);

cplx closed_form(const std::string& id, const ParamSet& params);

// Same quantity through the Fourier-coefficient or analytic engine.
cplx series_form(const std::string& id, const ParamSet& params, double tol = 1e-13);

struct ComponentReport {
    std::string name;
    cplx closed{};
    cplx numeric{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    QuadratureResult diagnostics;
    std::string reason;  // set when the oracle failed
};

struct VerificationReport {
    std::string id;
    ParamSet params;
    bool complex_valued = false;
    cplx closed{};
    cplx numeric{};
    double abs_err = 0.0;  // worst component
    double rel_err = 0.0;  // worst component
    bool pass = false;     // every component passes
    int periods_used = 0;
    std::int64_t function_evals = 0;
    std::string reason;
    std::vector<ComponentReport> components;
};

// pass <=> abs_err <= max(tol, tol |closed|) for every component.  Oracle
// failures produce a failing report, never an exception.
VerificationReport verify(const std::string& id, const ParamSet& params, double tol = 1e-6,
                          const OracleConfig& cfg = {});

// x_j = lo + j (hi - lo) / points, j < points; value is NaN at singular points.
struct PlotSample {
    double x;
    cplx value;
};

std::vector<PlotSample> plot_data(const std::string& id, const ParamSet& params, int points,
                                  std::optional<std::pair<double, double>> range = std::nullopt);

}  // namespace oscint
