#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinsieve/model.hpp"
#include "twinsieve/symmetric.hpp"

namespace twinsieve {

enum class OutputFormat { Csv, Json, Pretty };

const char* to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& s);

// Fixed backend, or the default rule: exact rationals up to z = 1000, floats
// above. Whatever is chosen lands in the config echo of every output.
struct BackendPolicy {
    std::optional<Backend> fixed;

    Backend resolve(uint64_t z) const {
        if (fixed) return *fixed;
        return z <= 1000 ? Backend::Rational : Backend::Float;
    }
    std::string name() const { return fixed ? to_string(*fixed) : "auto"; }

    static BackendPolicy from_string(const std::string& s);
};

struct ModelConfig {
    std::vector<uint64_t> x_values = {10'000, 100'000, 1'000'000, 10'000'000};
    double theta = 0.25;
    int t_max = 4;
    BackendPolicy backend;  // default: auto
    HLMode hl_mode = HLMode::Integral;
    uint64_t hl_cutoff = 10'000'000;
    OutputFormat output_format = OutputFormat::Pretty;

    void validate() const;  // throws std::invalid_argument
};

struct TableRow {
    uint64_t x = 0;
    uint64_t z_used = 0;
    uint64_t pi2_true = 0;
    int64_t hl_prediction = 0;
    double rel_err_hl = 0.0;  // percent, full precision; renderers round
    int64_t this_work_prediction = 0;
    double rel_err_this_work = 0.0;
    double d_approx = 0.0;
};

struct TableResult {
    ModelConfig config;
    std::vector<TableRow> rows;  // ascending x
    std::vector<std::string> notes;
};

// One row per x: exact pi_2, both predictors, relative errors, D_approx.
// Rows whose computed values deviate from the built-in reference tabulation
// (default protocol only) are flagged in notes.
TableResult run_table(const ModelConfig& config);

struct TruncationSweepResult {
    ModelConfig config;
    uint64_t x = 0;
    uint64_t z = 0;
    int t_lo = 0;
    int t_hi = 0;
    struct Row {
        int t_max = 0;
        double d_approx = 0.0;
        int64_t prediction = 0;
    };
    std::vector<Row> rows;
};

// D_approx and the prediction at each truncation t in [t_lo, t_hi] for
// fixed x, z = floor(x^theta).
TruncationSweepResult truncation_sweep(uint64_t x, int t_lo, int t_hi,
                                       const ModelConfig& config);

struct ThetaSweepResult {
    ModelConfig config;
    uint64_t x = 0;
    std::vector<double> thetas;
    struct Row {
        double theta = 0.0;
        uint64_t z = 0;
        double d_approx = 0.0;
        int64_t prediction = 0;
    };
    std::vector<Row> rows;
};

ThetaSweepResult sieving_limit_sweep(uint64_t x, const std::vector<double>& thetas,
                                     const ModelConfig& config);

// Constants panel: 2C2 partial product, Mertens constants, odd-prime zeta
// partial sums, and the z=31 correction diagnostics.
struct ConstantsReport {
    uint64_t hl_cutoff = 0;
    uint64_t zeta_z = 0;
    struct Entry {
        std::string name;
        double value = 0.0;
        std::string detail;
    };
    std::vector<Entry> entries;
    std::vector<std::string> notes;
};

ConstantsReport constants_report(uint64_t hl_cutoff, uint64_t zeta_z);

// --- rendering ---------------------------------------------------------
// CSV uses '\n' endings, a '# key=value' config preamble, and full-precision
// shortest-round-trip numbers, so a JSON result re-rendered as CSV is
// byte-identical to the directly rendered CSV.

std::string render_csv(const TableResult& r);
std::string render_pretty(const TableResult& r);
nlohmann::json to_json(const TableResult& r);
TableResult table_from_json(const nlohmann::json& j);

std::string render_csv(const TruncationSweepResult& r);
std::string render_pretty(const TruncationSweepResult& r);
nlohmann::json to_json(const TruncationSweepResult& r);
TruncationSweepResult truncation_sweep_from_json(const nlohmann::json& j);

std::string render_csv(const ThetaSweepResult& r);
std::string render_pretty(const ThetaSweepResult& r);
nlohmann::json to_json(const ThetaSweepResult& r);
ThetaSweepResult theta_sweep_from_json(const nlohmann::json& j);

std::string render_csv(const IdentityReport& r);
std::string render_pretty(const IdentityReport& r);
nlohmann::json to_json(const IdentityReport& r);

std::string render_csv(const ConstantsReport& r);
std::string render_pretty(const ConstantsReport& r);
nlohmann::json to_json(const ConstantsReport& r);

// Shortest double representation that parses back to the same bits (the
// JSON library's serializer, reused for CSV cells).
std::string format_full(double v);

// Signed percent with one decimal, e.g. "+4.4" / "-21.5".
std::string format_signed_pct(double v);

// "1e6"-style or plain integer counts, e.g. for --x lists.
uint64_t parse_count(const std::string& token);
std::vector<uint64_t> parse_count_list(const std::string& csv);
std::vector<double> parse_double_list(const std::string& csv);

}  // namespace twinsieve
