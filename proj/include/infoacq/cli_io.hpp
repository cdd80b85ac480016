#pragma once
// Run configuration, tabular output and the command bodies behind the CLI.
//
// Config files are flat `key = value` text, one entry per line, '#' starts a
// comment. Lists are comma separated. Unknown keys are errors.
//
//   theta1, theta2      component precisions, each in (1/2, 1)
//   u_correct, u_wrong  payoffs of a correct and a wrong guess
//   cost                processing cost c >= 0
//   costs               cost list for `sets` (defaults to [cost])
//   priors              one or two priors in [0,1]
//   subjective_p        probability used for ex-ante frequencies (optional)
//   seed                Monte Carlo seed
//   grid                points per sweep axis (>= 2)
//   draws               Monte Carlo draws (>= 1)

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "infoacq/core_model.hpp"

namespace infoacq {

class ConfigError : public ModelError {
public:
    ConfigError(const std::string& source, int line, const std::string& message);

    int line() const noexcept { return line_; }

private:
    int line_;
};

struct RunConfig {
    double theta1 = 0.6;
    double theta2 = 0.8;
    double u_correct = 1.0;
    double u_wrong = 0.0;
    double cost = 0.1;
    std::vector<double> costs;
    std::vector<double> priors{0.3, 0.7};
    std::optional<double> subjective_p;
    std::uint64_t seed = 42;
    int grid = 101;
    std::uint64_t draws = 1000000;

    // Re-checks every constraint; throws ModelError.
    void validate() const;

    InformationStructure info() const { return {theta1, theta2}; }
    PayoffStructure payoffs() const { return {u_correct, u_wrong}; }
    ModelParameters params() const { return {info(), payoffs(), cost}; }
    std::vector<double> cost_list() const { return costs.empty() ? std::vector<double>{cost} : costs; }

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Sets one key from its text value. `line` is only used in error messages.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& source = "<override>", int line = 0);
// "key=value" form used by --set.
void apply_override(RunConfig& cfg, const std::string& assignment);

RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& cfg);

// Tables ------------------------------------------------------------------------

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);  // throws if the width is wrong
};

enum class Format : std::uint8_t { Csv, Json };
Format parse_format(const std::string& text);

std::string format_number(double x);  // 12 significant digits
void emit_csv(const Table& table, std::ostream& out);
void emit_json(const Table& table, std::ostream& out);
void emit(const Table& table, Format format, std::ostream& out);

// Decoded records with every cell rendered as text, for comparing emitters.
using Record = std::map<std::string, std::string>;
std::vector<Record> decode_csv(std::istream& in);
std::vector<Record> decode_json(std::istream& in);

// Commands ------------------------------------------------------------------------

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitViolations = 2 };

struct CommandContext {
    RunConfig config;
    Format format = Format::Csv;
    std::optional<double> tolerance;
    std::ostream* out;
    std::ostream* err;
};

Table wtp_table(const RunConfig& cfg);
Table partition_table(const RunConfig& cfg);
Table sets_table(const RunConfig& cfg);
Table polarize_table(const RunConfig& cfg);
Table simulate_table(const RunConfig& cfg);

// Replays the introductory two-agent example. `tolerance` bounds the golden
// comparisons; they only apply when the scenario is the introductory one.
struct ExampleResult {
    Table table;
    bool golden_applies = false;
    int mismatches = 0;
};
ExampleResult example_report(const RunConfig& cfg, double tolerance = 0.005);

int cmd_wtp(const CommandContext& ctx);
int cmd_partition(const CommandContext& ctx);
int cmd_sets(const CommandContext& ctx);
int cmd_example(const CommandContext& ctx);
int cmd_polarize(const CommandContext& ctx);
int cmd_simulate(const CommandContext& ctx);
int cmd_verify(const CommandContext& ctx);

}  // namespace infoacq
