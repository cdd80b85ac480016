#include "infoacq/cli_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "infoacq/belief_sets.hpp"
#include "infoacq/incentives.hpp"
#include "infoacq/oracle.hpp"
#include "infoacq/patterns.hpp"

namespace infoacq {

namespace {

std::string location(const std::string& source, int line) {
    return line > 0 ? source + ":" + std::to_string(line) : source;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

double to_double(const std::string& text, const std::string& key, const std::string& source,
                 int line) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
        throw ConfigError(source, line, key + ": expected a number, got '" + t + "'");
    }
    return value;
}

std::uint64_t to_count(const std::string& text, const std::string& key, const std::string& source,
                       int line) {
    const std::string t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (!t.empty() && ec == std::errc() && ptr == t.data() + t.size()) return value;
    // Accept integral values written in floating notation, e.g. 1e6.
    const double d = to_double(t, key, source, line);
    if (d < 0.0 || d != std::floor(d) || d > 1.8e19) {
        throw ConfigError(source, line, key + ": expected a nonnegative integer, got '" + t + "'");
    }
    return static_cast<std::uint64_t>(d);
}

std::vector<double> to_list(const std::string& text, const std::string& key,
                            const std::string& source, int line) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(to_double(item, key, source, line));
    return out;
}

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join17(const std::vector<double>& xs) {
    std::string out;
    for (double x : xs) {
        if (!out.empty()) out += ", ";
        out += fmt17(x);
    }
    return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : ModelError(location(source, line) + ": " + message), line_(line) {}

void RunConfig::validate() const {
    params();  // precisions, payoffs and cost
    for (double c : costs) {
        if (!(c >= 0.0)) throw InvalidParameter("costs must be nonnegative");
    }
    if (priors.empty() || priors.size() > 2) {
        throw InvalidParameter("priors must list one or two probabilities");
    }
    for (double p : priors) checked_probability(p, "prior");
    if (subjective_p) checked_probability(*subjective_p, "subjective_p");
    if (grid < 2) throw InvalidParameter("grid must be at least 2");
    if (draws < 1) throw InvalidParameter("draws must be at least 1");
}

void apply_setting(RunConfig& cfg, const std::string& raw_key, const std::string& value,
                   const std::string& source, int line) {
    const std::string key = trim(raw_key);
    if (key == "theta1") {
        cfg.theta1 = to_double(value, key, source, line);
    } else if (key == "theta2") {
        cfg.theta2 = to_double(value, key, source, line);
    } else if (key == "u_correct") {
        cfg.u_correct = to_double(value, key, source, line);
    } else if (key == "u_wrong") {
        cfg.u_wrong = to_double(value, key, source, line);
    } else if (key == "cost") {
        cfg.cost = to_double(value, key, source, line);
    } else if (key == "costs") {
        cfg.costs = trim(value).empty() ? std::vector<double>{} : to_list(value, key, source, line);
    } else if (key == "priors") {
        cfg.priors = to_list(value, key, source, line);
    } else if (key == "subjective_p") {
        if (trim(value).empty()) {
            cfg.subjective_p.reset();
        } else {
            cfg.subjective_p = to_double(value, key, source, line);
        }
    } else if (key == "seed") {
        cfg.seed = to_count(value, key, source, line);
    } else if (key == "grid") {
        const auto g = to_count(value, key, source, line);
        if (g > 1000000) throw ConfigError(source, line, "grid: too large");
        cfg.grid = static_cast<int>(g);
    } else if (key == "draws") {
        cfg.draws = to_count(value, key, source, line);
    } else {
        throw ConfigError(source, line, "unknown key '" + key + "'");
    }
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("<override>", 0, "expected key=value, got '" + assignment + "'");
    }
    apply_setting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
    try {
        cfg.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const ModelError& e) {
        throw ConfigError("<override>", 0, e.what());
    }
}

RunConfig parse_config(std::istream& in, const std::string& source) {
    RunConfig cfg;
    std::string raw;
    int line = 0;
    std::map<std::string, int> seen;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(source, line, "expected key = value, got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        if (auto it = seen.find(key); it != seen.end()) {
            throw ConfigError(source, line,
                              "duplicate key '" + key + "' (first set on line " +
                                  std::to_string(it->second) + ")");
        }
        seen[key] = line;
        apply_setting(cfg, key, text.substr(eq + 1), source, line);
        // Per-key checks point at the offending line.
        try {
            if (key == "theta1" || key == "theta2") {
                if (!(cfg.theta1 > 0.5 && cfg.theta1 < 1.0) && key == "theta1") {
                    throw InvalidParameter("theta1 must lie strictly between 1/2 and 1");
                }
                if (!(cfg.theta2 > 0.5 && cfg.theta2 < 1.0) && key == "theta2") {
                    throw InvalidParameter("theta2 must lie strictly between 1/2 and 1");
                }
            } else if (key == "cost" && !(cfg.cost >= 0.0)) {
                throw InvalidParameter("cost must be nonnegative");
            } else if (key == "priors") {
                if (cfg.priors.empty() || cfg.priors.size() > 2) {
                    throw InvalidParameter("priors must list one or two probabilities");
                }
                for (double p : cfg.priors) checked_probability(p, "prior");
            } else if (key == "subjective_p" && cfg.subjective_p) {
                checked_probability(*cfg.subjective_p, "subjective_p");
            } else if (key == "costs") {
                for (double c : cfg.costs) {
                    if (!(c >= 0.0)) throw InvalidParameter("costs must be nonnegative");
                }
            } else if (key == "grid" && cfg.grid < 2) {
                throw InvalidParameter("grid must be at least 2");
            } else if (key == "draws" && cfg.draws < 1) {
                throw InvalidParameter("draws must be at least 1");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const ModelError& e) {
            throw ConfigError(source, line, e.what());
        }
    }
    try {
        cfg.validate();
    } catch (const ModelError& e) {
        throw ConfigError(source, 0, e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    return parse_config(in, path);
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "theta1 = " << fmt17(cfg.theta1) << "\n"
       << "theta2 = " << fmt17(cfg.theta2) << "\n"
       << "u_correct = " << fmt17(cfg.u_correct) << "\n"
       << "u_wrong = " << fmt17(cfg.u_wrong) << "\n"
       << "cost = " << fmt17(cfg.cost) << "\n"
       << "costs = " << join17(cfg.costs) << "\n"
       << "priors = " << join17(cfg.priors) << "\n";
    if (cfg.subjective_p) os << "subjective_p = " << fmt17(*cfg.subjective_p) << "\n";
    os << "seed = " << cfg.seed << "\n"
       << "grid = " << cfg.grid << "\n"
       << "draws = " << cfg.draws << "\n";
    return os.str();
}

// Tables ------------------------------------------------------------------------

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw InvalidParameter("unknown format '" + text + "' (expected csv or json)");
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string render(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char ch = line[k];
        if (quoted) {
            if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                field += '"';
                ++k;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    out.push_back(field);
    return out;
}

}  // namespace

void emit_csv(const Table& table, std::ostream& out) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
        out << (k ? "," : "") << csv_quote(table.columns[k]);
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_quote(render(row[k]));
        out << "\n";
    }
}

void emit_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        rec[table.columns[k]] = std::stod(format_number(v));
                    } else {
                        rec[table.columns[k]] = v;
                    }
                },
                row[k]);
        }
        doc.push_back(std::move(rec));
    }
    out << doc.dump(2) << "\n";
}

void emit(const Table& table, Format format, std::ostream& out) {
    if (format == Format::Json) {
        emit_json(table, out);
    } else {
        emit_csv(table, out);
    }
}

std::vector<Record> decode_csv(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    if (!std::getline(in, line)) return out;
    const auto header = csv_fields(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = csv_fields(line);
        if (fields.size() != header.size()) throw InvalidParameter("ragged CSV row: " + line);
        Record rec;
        for (std::size_t k = 0; k < header.size(); ++k) rec[header[k]] = fields[k];
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<Record> decode_json(std::istream& in) {
    const auto doc = nlohmann::json::parse(in);
    std::vector<Record> out;
    for (const auto& obj : doc) {
        Record rec;
        for (const auto& [key, value] : obj.items()) {
            if (value.is_number_float()) {
                rec[key] = format_number(value.get<double>());
            } else if (value.is_number_unsigned()) {
                rec[key] = std::to_string(value.get<std::uint64_t>());
            } else if (value.is_number_integer()) {
                rec[key] = std::to_string(value.get<std::int64_t>());
            } else if (value.is_boolean()) {
                rec[key] = value.get<bool>() ? "true" : "false";
            } else {
                rec[key] = value.get<std::string>();
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

// Sweeps --------------------------------------------------------------------------

namespace {

std::vector<double> sweep_axis(int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(static_cast<double>(k) / (n - 1));
    return out;
}

std::int64_t as_int(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

Table wtp_table(const RunConfig& cfg) {
    cfg.validate();
    const auto info = cfg.info();
    const auto payoffs = cfg.payoffs();
    Table t{{"p", "c_alpha", "c_beta", "case_alpha", "case_beta", "action_alpha", "action_beta"}, {}};
    for (double p : sweep_axis(cfg.grid)) {
        const double ca = willingness_to_pay(p, info, payoffs, Component::Alpha);
        const double cb = willingness_to_pay(p, info, payoffs, Component::Beta);
        t.add({p, ca, cb, std::int64_t{classify_case(p, info, Component::Alpha).value()},
               std::int64_t{classify_case(p, info, Component::Beta).value()},
               to_string(acquisition_decision(p, info, payoffs, cfg.cost, Component::Alpha)),
               to_string(acquisition_decision(p, info, payoffs, cfg.cost, Component::Beta))});
    }
    return t;
}

Table partition_table(const RunConfig& cfg) {
    cfg.validate();
    Table t{{"case", "first_component", "lower", "upper", "second_component_matters"}, {}};
    for (const auto& ci : case_intervals(cfg.info())) {
        t.add({std::int64_t{ci.id.value()}, to_string(ci.id.signal()), ci.lower, ci.upper,
               ci.id.pays()});
    }
    return t;
}

Table sets_table(const RunConfig& cfg) {
    cfg.validate();
    const auto info = cfg.info();
    const auto payoffs = cfg.payoffs();
    const auto axis = sweep_axis(cfg.grid);
    std::vector<WtpPair> w;
    for (double p : axis) w.push_back(wtp_pair(p, info, payoffs));
    Table t{{"cost", "p_i", "p_j", "in_B_ij_alpha", "in_B_ji_beta", "in_B_ji_alpha",
             "in_B_ij_beta", "in_V_ij_alpha", "in_V_ji_beta", "in_V_ji_alpha", "in_V_ij_beta"},
            {}};
    for (double c : cfg.cost_list()) {
        for (std::size_t i = 0; i < axis.size(); ++i) {
            for (std::size_t j = i; j < axis.size(); ++j) {
                const auto pc = classify_pair(w[i], w[j], c);
                t.add({c, axis[i], axis[j], pc.in_B_ij_alpha, pc.in_B_ji_beta, pc.in_B_ji_alpha,
                       pc.in_B_ij_beta, pc.in_V_ij_alpha, pc.in_V_ji_beta, pc.in_V_ji_alpha,
                       pc.in_V_ij_beta});
            }
        }
    }
    return t;
}

Table polarize_table(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.priors.size() != 2) throw InvalidParameter("polarize needs two priors");
    const double p_i = std::min(cfg.priors[0], cfg.priors[1]);
    const double p_j = std::max(cfg.priors[0], cfg.priors[1]);
    const auto params = cfg.params();
    PbFeasibility f;
    if (p_i < p_j) f = pb_feasible(p_i, p_j, params.info, params.payoffs, params.cost);

    Table t{{"signal", "p_i", "p_j", "realized_i", "realized_j", "action_i", "action_j",
             "divergence", "inversion", "polarized", "feasible", "via_alpha", "via_beta"},
            {}};
    if (cfg.subjective_p) {
        t.columns.push_back("pb_probability");
        t.columns.push_back("pb_probability_joint");
    }
    for (const auto& s : all_signals()) {
        const auto o = pairwise_outcome(p_i, p_j, params, s);
        std::vector<Cell> row{to_string(s),
                              p_i,
                              p_j,
                              o.realized_posteriors.first,
                              o.realized_posteriors.second,
                              to_string(o.acquisition.first),
                              to_string(o.acquisition.second),
                              o.divergence,
                              o.inversion,
                              o.polarized,
                              f.feasible,
                              f.via_alpha,
                              f.via_beta};
        if (cfg.subjective_p) {
            const bool ordered = p_i < p_j;
            row.push_back(ordered ? pb_probability(*cfg.subjective_p, p_i, p_j, params.info,
                                                   params.payoffs, params.cost)
                                  : 0.0);
            row.push_back(ordered ? pb_probability_joint(*cfg.subjective_p, p_i, p_j, params.info,
                                                         params.payoffs, params.cost)
                                  : 0.0);
        }
        t.add(std::move(row));
    }
    return t;
}

Table simulate_table(const RunConfig& cfg) {
    cfg.validate();
    if (!cfg.subjective_p) throw InvalidParameter("simulate needs subjective_p");
    const double ps = *cfg.subjective_p;
    const auto params = cfg.params();
    Table t{{"pattern", "priors", "frequency", "standard_error", "draws", "seed", "exact",
             "closed_form", "z"},
            {}};
    std::uint64_t stream = 0;
    auto run = [&](PatternId id, double a, std::optional<double> b) {
        const std::uint64_t seed = Rng(cfg.seed).split(stream++).seed();
        const auto est = mc_pattern_frequency(id, ps, a, b, params, cfg.draws, seed);
        const double exact = pattern_probability(id, ps, a, b, params);
        double closed = exact;
        std::string priors = format_number(a);
        if (b) {
            priors += "," + format_number(*b);
            if (id == PatternId::PB) {
                const double lo = std::min(a, *b);
                const double hi = std::max(a, *b);
                closed = lo < hi ? pb_probability(ps, lo, hi, params.info, params.payoffs, params.cost)
                                 : 0.0;
            }
        }
        const double z = est.standard_error > 0.0 ? (est.frequency - exact) / est.standard_error : 0.0;
        t.add({to_string(id), priors, est.frequency, est.standard_error, as_int(est.draws),
               as_int(est.seed), exact, closed, z});
    };
    if (cfg.priors.size() == 2) {
        for (auto id : {PatternId::PB, PatternId::DA, PatternId::IU}) {
            run(id, cfg.priors[0], cfg.priors[1]);
        }
    }
    for (double p : cfg.priors) {
        for (auto id : {PatternId::CB, PatternId::DB, PatternId::UR, PatternId::OR}) {
            if ((id == PatternId::CB || id == PatternId::DB) && p == 0.5) continue;
            run(id, p, std::nullopt);
        }
    }
    return t;
}

// Introductory example --------------------------------------------------------------

ExampleResult example_report(const RunConfig& cfg, double tolerance) {
    cfg.validate();
    if (cfg.priors.size() != 2) throw InvalidParameter("example needs two priors");
    const double low = std::min(cfg.priors[0], cfg.priors[1]);
    const double high = std::max(cfg.priors[0], cfg.priors[1]);
    const auto params = cfg.params();
    const auto& info = params.info;
    const auto& payoffs = params.payoffs;
    const auto A = Component::Alpha;
    const auto B = Component::Beta;

    ExampleResult result;
    result.golden_applies = cfg.theta1 == 0.6 && cfg.theta2 == 0.8 &&
                            payoffs.delta_u() == 1.0 && cfg.cost == 0.1 && low == 0.3 &&
                            high == 0.7;
    result.table.columns = {"quantity", "value", "expected", "abs_error", "ok"};
    auto number = [&](const std::string& name, double value, double expected) {
        const double err = std::abs(value - expected);
        const bool ok = err <= tolerance;
        if (!ok) ++result.mismatches;
        result.table.add({name, value, expected, err, ok});
    };
    auto verdict = [&](const std::string& name, bool value, bool expected) {
        const bool ok = value == expected;
        if (!ok) ++result.mismatches;
        result.table.add({name, value ? 1.0 : 0.0, expected ? 1.0 : 0.0, ok ? 0.0 : 1.0, ok});
    };
    auto acquires = [&](double p, Component s1) {
        return acquisition_decision(p, params, s1) == Acquisition::Acquire;
    };
    const Signal ab{A, B};
    const Signal aa{A, A};

    number("p_alpha_high", posterior_after_first(high, info, A), 0.78);
    number("p_alpha_low", posterior_after_first(low, info, A), 0.39);
    number("c_alpha_high", willingness_to_pay(high, info, payoffs, A), 0.02);
    number("c_alpha_low", willingness_to_pay(low, info, payoffs, A), 0.19);
    verdict("high_acquires_after_alpha", acquires(high, A), false);
    verdict("low_acquires_after_alpha", acquires(low, A), true);
    number("p_alphabeta_low", posterior_after_both(low, info, A, B), 0.14);
    number("p_alphaalpha_high", posterior_after_both(high, info, A, A), 0.93);
    number("c_beta_high", willingness_to_pay(high, info, payoffs, B), 0.19);
    number("c_beta_low", willingness_to_pay(low, info, payoffs, B), 0.02);
    verdict("high_acquires_after_beta", acquires(high, B), true);
    verdict("low_acquires_after_beta", acquires(low, B), false);
    verdict("polarization_alpha_beta", low < high && pairwise_outcome(low, high, params, ab).polarized,
            true);
    verdict("confirmatory_high_alpha_beta",
            high != 0.5 && cb_db_report(high, params, ab).confirmatory, true);
    verdict("underreaction_high_alpha_alpha", reaction_report(high, params, aa).underreaction,
            true);
    return result;
}

// Commands --------------------------------------------------------------------------

namespace {

int emit_table(const CommandContext& ctx, const Table& t) {
    emit(t, ctx.format, *ctx.out);
    return kExitOk;
}

}  // namespace

int cmd_wtp(const CommandContext& ctx) { return emit_table(ctx, wtp_table(ctx.config)); }
int cmd_partition(const CommandContext& ctx) { return emit_table(ctx, partition_table(ctx.config)); }
int cmd_sets(const CommandContext& ctx) { return emit_table(ctx, sets_table(ctx.config)); }
int cmd_polarize(const CommandContext& ctx) { return emit_table(ctx, polarize_table(ctx.config)); }
int cmd_simulate(const CommandContext& ctx) { return emit_table(ctx, simulate_table(ctx.config)); }

int cmd_example(const CommandContext& ctx) {
    const auto result = example_report(ctx.config, ctx.tolerance.value_or(0.005));
    emit(result.table, ctx.format, *ctx.out);
    if (!result.golden_applies) {
        *ctx.err << "note: scenario differs from the introductory example; expected values are "
                    "shown for reference only\n";
        return kExitOk;
    }
    if (result.mismatches > 0) {
        *ctx.err << result.mismatches << " value(s) outside tolerance\n";
        return kExitViolations;
    }
    return kExitOk;
}

int cmd_verify(const CommandContext& ctx) {
    const RunConfig& cfg = ctx.config;
    cfg.validate();
    Table t{{"section", "name", "checked", "skipped", "violations", "detail"}, {}};
    std::uint64_t total = 0;
    for (auto id : all_theorems()) {
        GridSpec grid = default_grid(id);
        if (ctx.tolerance) grid.tolerance = *ctx.tolerance;
        const auto report = grid_theorem_check(id, grid);
        total += report.violation_count;
        t.add({std::string("theorem"), to_string(id), as_int(report.checked),
               as_int(report.skipped), as_int(report.violation_count), std::string("")});
        for (const auto& v : report.violations) {
            *ctx.err << to_string(id) << ": " << v.claim << " [" << v.tuple << "]\n";
        }
    }

    // Monte Carlo against exact enumeration for the configured scenario.
    const double ps = cfg.subjective_p.value_or(0.5);
    const auto params = cfg.params();
    std::uint64_t stream = 0;
    auto mc = [&](PatternId id, double a, std::optional<double> b) {
        const std::uint64_t seed = Rng(cfg.seed).split(stream++).seed();
        const auto est = mc_pattern_frequency(id, ps, a, b, params, cfg.draws, seed);
        const double exact = pattern_probability(id, ps, a, b, params);
        const double gap = std::abs(est.frequency - exact);
        const bool ok = est.standard_error > 0.0 ? gap <= 4.0 * est.standard_error : gap == 0.0;
        if (!ok) ++total;
        std::string detail = "frequency=" + format_number(est.frequency) +
                             " exact=" + format_number(exact) +
                             " se=" + format_number(est.standard_error) +
                             " seed=" + std::to_string(seed);
        t.add({std::string("monte-carlo"), to_string(id), as_int(est.draws), std::int64_t{0},
               std::int64_t{ok ? 0 : 1}, detail});
        if (!ok) *ctx.err << "monte-carlo " << to_string(id) << ": " << detail << "\n";
    };
    if (cfg.priors.size() == 2) {
        for (auto id : {PatternId::PB, PatternId::DA, PatternId::IU}) mc(id, cfg.priors[0], cfg.priors[1]);
        const double lo = std::min(cfg.priors[0], cfg.priors[1]);
        const double hi = std::max(cfg.priors[0], cfg.priors[1]);
        if (lo < hi) {
            const double closed = pb_probability(ps, lo, hi, params.info, params.payoffs, params.cost);
            const double joint = pb_probability_joint(ps, lo, hi, params.info, params.payoffs, params.cost);
            t.add({std::string("note"), std::string("pb-closed-form"), std::int64_t{0},
                   std::int64_t{0}, std::int64_t{0},
                   "product-of-marginals=" + format_number(closed) +
                       " joint=" + format_number(joint) +
                       " (components are independent only given the state)"});
        }
    }
    for (double p : cfg.priors) {
        for (auto id : {PatternId::CB, PatternId::DB, PatternId::UR, PatternId::OR}) {
            if ((id == PatternId::CB || id == PatternId::DB) && p == 0.5) continue;
            mc(id, p, std::nullopt);
        }
    }

    emit(t, ctx.format, *ctx.out);
    if (total > 0) {
        *ctx.err << total << " violation(s)\n";
        return kExitViolations;
    }
    return kExitOk;
}

}  // namespace infoacq
