#include "infoacq/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "infoacq/belief_sets.hpp"
#include "infoacq/incentives.hpp"
#include "infoacq/patterns.hpp"

namespace infoacq {

// Outcome enumeration -----------------------------------------------------------

namespace {

// P(component = s | state) for a component of precision theta.
double likelihood(double theta, State w, Component s) {
    const bool match = (w == State::A) == (s == Component::Alpha);
    return match ? theta : 1.0 - theta;
}

double payoff(State guess, State truth, const PayoffStructure& u) {
    return guess == truth ? u.u_correct() : u.u_wrong();
}

// Guess maximizing expected payoff given unnormalized weights on A and B.
State best_guess(double weight_a, double weight_b) {
    return weight_a >= weight_b ? State::A : State::B;
}

}  // namespace

double OutcomeTable::total_probability() const {
    double total = 0.0;
    for (const auto& row : entries) total += row.probability;
    return total;
}

double OutcomeTable::expected_acquire() const {
    double total = 0.0;
    for (const auto& row : entries) total += row.probability * row.utility_acquire;
    return total;
}

double OutcomeTable::expected_skip() const {
    double total = 0.0;
    for (const auto& row : entries) total += row.probability * row.utility_skip;
    return total;
}

OutcomeTable outcome_table(double p, const InformationStructure& info,
                           const PayoffStructure& payoffs, Component s1) {
    checked_probability(p, "prior");
    const std::array<State, 2> states{State::A, State::B};
    const std::array<Component, 2> seconds{Component::Alpha, Component::Beta};

    // Joint weights P(state, s1, s2) before conditioning on s1.
    double joint[2][2];
    double norm = 0.0;
    for (int w = 0; w < 2; ++w) {
        const double prior = states[w] == State::A ? p : 1.0 - p;
        for (int k = 0; k < 2; ++k) {
            joint[w][k] = prior * likelihood(info.theta1(), states[w], s1) *
                          likelihood(info.theta2(), states[w], seconds[k]);
            norm += joint[w][k];
        }
    }

    const State guess_skip =
        best_guess(joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]);
    OutcomeTable table{s1, {}};
    for (int k = 0; k < 2; ++k) {
        const State guess_acquire = best_guess(joint[0][k], joint[1][k]);
        for (int w = 0; w < 2; ++w) {
            table.entries.push_back({states[w], seconds[k], joint[w][k] / norm,
                                     payoff(guess_acquire, states[w], payoffs),
                                     payoff(guess_skip, states[w], payoffs)});
        }
    }
    return table;
}

double brute_force_voi(double p, const InformationStructure& info,
                       const PayoffStructure& payoffs, Component s1) {
    const auto table = outcome_table(p, info, payoffs, s1);
    double gain = 0.0;
    for (const auto& row : table.entries) {
        gain += row.probability * (row.utility_acquire - row.utility_skip);
    }
    return std::max(0.0, gain);
}

// Monte Carlo -------------------------------------------------------------------

std::string to_string(PatternId id) {
    switch (id) {
        case PatternId::PB: return "PB";
        case PatternId::DA: return "DA";
        case PatternId::IU: return "IU";
        case PatternId::CB: return "CB";
        case PatternId::DB: return "DB";
        case PatternId::UR: return "UR";
        case PatternId::OR: return "OR";
    }
    return "?";
}

PatternId parse_pattern(const std::string& text) {
    std::string up = text;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) {
        return static_cast<char>(std::toupper(ch));
    });
    for (auto id : {PatternId::PB, PatternId::DA, PatternId::IU, PatternId::CB, PatternId::DB,
                    PatternId::UR, PatternId::OR}) {
        if (to_string(id) == up) return id;
    }
    throw InvalidParameter("unknown pattern id '" + text + "' (expected PB, DA, IU, CB, DB, UR, OR)");
}

bool is_pairwise(PatternId id) {
    return id == PatternId::PB || id == PatternId::DA || id == PatternId::IU;
}

std::vector<bool> pattern_signals(PatternId pattern, double p_i, std::optional<double> p_j,
                                  const ModelParameters& params) {
    checked_probability(p_i, "p_i");
    std::vector<bool> out;
    if (is_pairwise(pattern)) {
        if (!p_j) throw InvalidParameter(to_string(pattern) + " needs two priors");
        checked_probability(*p_j, "p_j");
        const double lo = std::min(p_i, *p_j);
        const double hi = std::max(p_i, *p_j);
        for (const auto& s : all_signals()) {
            const auto o = pairwise_outcome(lo, hi, params, s);
            switch (pattern) {
                case PatternId::PB: out.push_back(o.polarized); break;
                case PatternId::DA: out.push_back(o.diverging_attitudes()); break;
                default: out.push_back(o.inverse_updating()); break;
            }
        }
        return out;
    }
    for (const auto& s : all_signals()) {
        switch (pattern) {
            case PatternId::CB: out.push_back(cb_db_report(p_i, params, s).confirmatory); break;
            case PatternId::DB: out.push_back(cb_db_report(p_i, params, s).disproving); break;
            case PatternId::UR: out.push_back(reaction_report(p_i, params, s).underreaction); break;
            default: out.push_back(reaction_report(p_i, params, s).overreaction); break;
        }
    }
    return out;
}

double pattern_probability(PatternId pattern, double p_subjective, double p_i,
                           std::optional<double> p_j, const ModelParameters& params) {
    checked_probability(p_subjective, "subjective probability");
    const auto hits = pattern_signals(pattern, p_i, p_j, params);
    double total = 0.0;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k]) total += signal_probability(p_subjective, params.info, all_signals()[k]);
    }
    return total;
}

MonteCarloEstimate mc_pattern_frequency(PatternId pattern, double p_subjective, double p_i,
                                        std::optional<double> p_j,
                                        const ModelParameters& params, std::uint64_t draws,
                                        std::uint64_t seed, unsigned threads) {
    checked_probability(p_subjective, "subjective probability");
    if (draws == 0) throw InvalidParameter("draws must be positive");
    const auto hit_table = pattern_signals(pattern, p_i, p_j, params);
    std::array<bool, 4> hit{};
    for (std::size_t k = 0; k < 4; ++k) hit[k] = hit_table[k];

    constexpr std::uint64_t kShard = 1u << 16;
    const std::uint64_t shards = (draws + kShard - 1) / kShard;
    std::vector<std::uint64_t> counts(shards, 0);
    const Rng root(seed);

    auto run_shard = [&](std::uint64_t shard) {
        Rng rng = root.split(shard);
        const std::uint64_t n = std::min(kShard, draws - shard * kShard);
        std::uint64_t local = 0;
        for (std::uint64_t k = 0; k < n; ++k) {
            const Signal s = sample_state_and_signal(p_subjective, params.info, rng).signal;
            const int index = (s.first == Component::Beta ? 2 : 0) +
                              (s.second == Component::Beta ? 1 : 0);
            local += hit[index] ? 1 : 0;
        }
        counts[shard] = local;
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shards));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t shard = next++; shard < shards; shard = next++) run_shard(shard);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    MonteCarloEstimate out;
    for (auto c : counts) out.hits += c;
    out.draws = draws;
    out.seed = seed;
    out.frequency = static_cast<double>(out.hits) / static_cast<double>(draws);
    out.standard_error =
        std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(draws));
    return out;
}

// Grid theorem checks -------------------------------------------------------------

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::PbFeasibility: return "pb-feasibility";
        case TheoremId::Disconfirmation: return "disconfirmation";
        case TheoremId::Confirmation: return "confirmation";
        case TheoremId::Reaction: return "reaction";
        case TheoremId::SameAction: return "same-action";
        case TheoremId::NoSwap: return "no-swap";
        case TheoremId::OracleEquivalence: return "oracle";
        case TheoremId::CostStructure: return "cost-structure";
    }
    return "?";
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids{
        TheoremId::PbFeasibility,   TheoremId::Disconfirmation,   TheoremId::Confirmation,
        TheoremId::Reaction,   TheoremId::SameAction, TheoremId::NoSwap,
        TheoremId::OracleEquivalence, TheoremId::CostStructure,
    };
    return ids;
}

TheoremId parse_theorem(const std::string& text) {
    for (auto id : all_theorems()) {
        if (to_string(id) == text) return id;
    }
    throw InvalidParameter("unknown theorem id '" + text + "'");
}

namespace {

std::vector<std::pair<double, double>> theta_lattice() {
    const std::array<double, 5> values{0.55, 0.65, 0.75, 0.85, 0.95};
    std::vector<std::pair<double, double>> out;
    for (double a : values) {
        for (double b : values) out.emplace_back(a, b);
    }
    return out;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Cell {
    double theta1;
    double theta2;
    double delta_u;
    std::optional<double> cost;
};

std::string describe(const Cell& cell, std::initializer_list<std::pair<const char*, double>> more,
                     const std::optional<Signal>& signal = std::nullopt,
                     const std::optional<Component>& s1 = std::nullopt) {
    std::string out = "theta1=" + fmt(cell.theta1) + " theta2=" + fmt(cell.theta2) +
                      " delta_u=" + fmt(cell.delta_u);
    if (cell.cost) out += " c=" + fmt(*cell.cost);
    for (const auto& [key, value] : more) out += std::string(" ") + key + "=" + fmt(value);
    if (signal) out += " signal=" + to_string(*signal);
    if (s1) out += " s1=" + to_string(*s1);
    return out;
}

class Recorder {
public:
    Recorder(TheoremId id, std::size_t cap) : cap_(cap) { report_.theorem = id; }

    void pass() { ++report_.checked; }
    void skip() { ++report_.skipped; }
    void check(bool ok, const std::string& claim, const std::function<std::string()>& tuple) {
        ++report_.checked;
        if (ok) return;
        ++report_.violation_count;
        if (report_.violations.size() < cap_) report_.violations.push_back({claim, tuple()});
    }
    TheoremReport take() { return std::move(report_); }

private:
    TheoremReport report_;
    std::size_t cap_;
};

template <typename Body>
void for_each_model(const GridSpec& grid, bool with_costs, Body&& body) {
    for (const auto& [t1, t2] : grid.thetas) {
        const InformationStructure info(t1, t2);
        for (double du : grid.delta_us) {
            const PayoffStructure payoffs(du);
            if (!with_costs) {
                body(Cell{t1, t2, du, std::nullopt}, info, payoffs, 0.0);
                continue;
            }
            for (double c : grid.costs) body(Cell{t1, t2, du, c}, info, payoffs, c);
        }
    }
}

bool near(double a, double b, double eps) { return std::abs(a - b) < eps; }

TheoremReport check_pb_feasibility(const GridSpec& grid, const WtpFunction& wtp, std::size_t cap) {
    Recorder rec(TheoremId::PbFeasibility, cap);
    const auto priors = grid_priors(grid);
    for_each_model(grid, true, [&](const Cell& cell, const InformationStructure& info,
                                   const PayoffStructure& payoffs, double c) {
        const ModelParameters params(info, payoffs, c);
        std::vector<WtpPair> injected, exact;
        for (double p : priors) {
            injected.push_back({wtp(p, info, payoffs, Component::Alpha),
                                wtp(p, info, payoffs, Component::Beta)});
            exact.push_back(wtp_pair(p, info, payoffs));
        }
        auto on_boundary = [&](std::size_t k) {
            return near(injected[k].alpha, c, grid.boundary_exclusion) ||
                   near(injected[k].beta, c, grid.boundary_exclusion) ||
                   near(exact[k].alpha, c, grid.boundary_exclusion) ||
                   near(exact[k].beta, c, grid.boundary_exclusion);
        };
        for (std::size_t i = 0; i < priors.size(); ++i) {
            for (std::size_t j = i + 1; j < priors.size(); ++j) {
                if (on_boundary(i) || on_boundary(j)) {
                    rec.skip();
                    continue;
                }
                const auto f = pb_feasible(priors[i], priors[j], injected[i], injected[j], info, c);
                bool polarizes = false;
                for (const auto& s : all_signals()) {
                    polarizes = polarizes || pairwise_outcome(priors[i], priors[j], params, s).polarized;
                }
                rec.check(f.feasible == polarizes,
                          f.feasible ? "feasible but no realization polarizes"
                                     : "a realization polarizes but pb_feasible is false",
                          [&] { return describe(cell, {{"p_i", priors[i]}, {"p_j", priors[j]}}); });
            }
        }
    });
    return rec.take();
}

TheoremReport check_disconfirmation(const GridSpec& grid, std::size_t cap) {
    Recorder rec(TheoremId::Disconfirmation, cap);
    const auto priors = grid_priors(grid);
    for_each_model(grid, true, [&](const Cell& cell, const InformationStructure& info,
                                   const PayoffStructure& payoffs, double c) {
        for (double p : priors) {
            const auto def = disconfirmation_report(p, info, payoffs, c);
            const double eps = grid.boundary_exclusion;
            if (p == 0.5 || near(def.wtp_alpha, c, eps) || near(def.wtp_beta, c, eps) ||
                (def.wtp_alpha > 0.0 && near(def.wtp_alpha, def.wtp_beta, eps))) {
                rec.skip();
                continue;
            }
            const auto chr = disconfirmation_characterized(p, info, payoffs, c);
            rec.check(def.tendency == chr.tendency && def.exhibits == chr.exhibits,
                      "disconfirmation definition and characterization disagree",
                      [&] { return describe(cell, {{"p", p}}); });
        }
    });
    return rec.take();
}

template <typename Def, typename Chr, typename Same>
TheoremReport check_individual(TheoremId id, const GridSpec& grid, std::size_t cap, Def&& def,
                               Chr&& chr, Same&& same, const char* claim) {
    Recorder rec(id, cap);
    const auto priors = grid_priors(grid);
    for_each_model(grid, true, [&](const Cell& cell, const InformationStructure& info,
                                   const PayoffStructure& payoffs, double c) {
        const ModelParameters params(info, payoffs, c);
        for (double p : priors) {
            const auto w = wtp_pair(p, info, payoffs);
            for (const auto& s : all_signals()) {
                if (p == 0.5 || near(w.at(s.first), c, grid.boundary_exclusion)) {
                    rec.skip();
                    continue;
                }
                rec.check(same(def(p, params, s), chr(p, params, s)), claim,
                          [&] { return describe(cell, {{"p", p}}, s); });
            }
        }
    });
    return rec.take();
}

TheoremReport check_same_action(const GridSpec& grid, std::size_t cap) {
    Recorder rec(TheoremId::SameAction, cap);
    const auto priors = grid_priors(grid);
    for_each_model(grid, true, [&](const Cell& cell, const InformationStructure& info,
                                   const PayoffStructure& payoffs, double c) {
        const ModelParameters params(info, payoffs, c);
        for (std::size_t i = 0; i < priors.size(); ++i) {
            for (std::size_t j = i + 1; j < priors.size(); ++j) {
                for (const auto& s : all_signals()) {
                    const auto o = pairwise_outcome(priors[i], priors[j], params, s);
                    if (o.acquisition.first != o.acquisition.second) continue;
                    rec.check(o.inversion >= -grid.tolerance,
                              "same acquisition action but inverse updating", [&] {
                                  return describe(cell, {{"p_i", priors[i]}, {"p_j", priors[j]},
                                                         {"I", o.inversion}},
                                                  s);
                              });
                }
            }
        }
    });
    return rec.take();
}

TheoremReport check_no_swap(const GridSpec& grid, const WtpFunction& wtp, std::size_t cap) {
    Recorder rec(TheoremId::NoSwap, cap);
    const auto priors = grid_priors(grid);
    const Signal ab{Component::Alpha, Component::Beta};
    const Signal ba{Component::Beta, Component::Alpha};
    for_each_model(grid, true, [&](const Cell& cell, const InformationStructure& info,
                                   const PayoffStructure& payoffs, double c) {
        const ModelParameters params(info, payoffs, c);
        for (std::size_t i = 0; i < priors.size(); ++i) {
            for (std::size_t j = i + 1; j < priors.size(); ++j) {
                const double p_i = priors[i];
                const double p_j = priors[j];
                auto probe = [&](const Signal& s) {
                    const auto o = pairwise_outcome(p_i, p_j, params, s);
                    if (o.acquisition.first == o.acquisition.second) return;
                    rec.check(o.divergence >= -grid.tolerance,
                              "diverging attitudes on a no-swap pair", [&] {
                                  return describe(cell, {{"p_i", p_i}, {"p_j", p_j},
                                                         {"D", o.divergence}},
                                                  s);
                              });
                };
                if (wtp(p_j, info, payoffs, Component::Alpha) >
                    wtp(p_i, info, payoffs, Component::Alpha)) {
                    probe(ab);
                }
                if (wtp(p_i, info, payoffs, Component::Beta) >
                    wtp(p_j, info, payoffs, Component::Beta)) {
                    probe(ba);
                }
            }
        }
    });
    return rec.take();
}

TheoremReport check_oracle(const GridSpec& grid, const WtpFunction& wtp, std::size_t cap) {
    Recorder rec(TheoremId::OracleEquivalence, cap);
    const auto priors = grid_priors(grid);
    for_each_model(grid, false, [&](const Cell& cell, const InformationStructure& info,
                                    const PayoffStructure& payoffs, double) {
        for (double p : priors) {
            for (auto s1 : {Component::Alpha, Component::Beta}) {
                const double closed = wtp(p, info, payoffs, s1);
                const double brute = brute_force_voi(p, info, payoffs, s1);
                rec.check(std::abs(closed - brute) <= grid.tolerance,
                          "closed-form willingness to pay differs from brute-force VOI", [&] {
                              return describe(cell, {{"p", p}, {"wtp", closed}, {"voi", brute}},
                                              std::nullopt, s1);
                          });
            }
        }
    });
    return rec.take();
}

TheoremReport check_cost_structure(const GridSpec& grid, const WtpFunction& wtp,
                                   std::size_t cap) {
    Recorder rec(TheoremId::CostStructure, cap);
    const auto priors = grid_priors(grid);
    const double tol = grid.tolerance;
    for_each_model(grid, false, [&](const Cell& cell, const InformationStructure& info,
                                    const PayoffStructure& payoffs, double) {
        const double cap_value = max_willingness_to_pay(info, payoffs);
        for (auto s1 : {Component::Alpha, Component::Beta}) {
            const double peak = peak_prior(info, s1);
            const double at_peak = wtp(peak, info, payoffs, s1);
            rec.check(std::abs(at_peak - cap_value) <= tol, "maximum not attained at the peak",
                      [&] { return describe(cell, {{"p", peak}, {"wtp", at_peak}}, std::nullopt, s1); });
        }
        std::vector<double> wa, wb;
        for (double p : priors) {
            wa.push_back(wtp(p, info, payoffs, Component::Alpha));
            wb.push_back(wtp(p, info, payoffs, Component::Beta));
        }
        for (std::size_t k = 0; k < priors.size(); ++k) {
            const double p = priors[k];
            const double mirrored = wtp(1.0 - p, info, payoffs, Component::Beta);
            rec.check(std::abs(wa[k] - mirrored) <= tol, "c_alpha(p) != c_beta(1-p)",
                      [&] { return describe(cell, {{"p", p}, {"c_alpha", wa[k]}, {"c_beta_mirror", mirrored}}); });
            rec.check(wa[k] <= cap_value + tol && wb[k] <= cap_value + tol && wa[k] >= 0.0 &&
                          wb[k] >= 0.0,
                      "willingness to pay outside [0, max]",
                      [&] { return describe(cell, {{"p", p}, {"c_alpha", wa[k]}, {"c_beta", wb[k]}}); });
        }
        // Rising up to the peak, falling after it.
        for (auto s1 : {Component::Alpha, Component::Beta}) {
            const auto& w = s1 == Component::Alpha ? wa : wb;
            const double peak = peak_prior(info, s1);
            for (std::size_t k = 0; k + 1 < priors.size(); ++k) {
                const double lo = priors[k];
                const double hi = priors[k + 1];
                if (lo < peak && hi <= peak) {
                    rec.check(w[k + 1] >= w[k] - tol, "decreasing below the peak",
                              [&] { return describe(cell, {{"p", lo}, {"next", hi}}, std::nullopt, s1); });
                } else if (lo >= peak) {
                    rec.check(w[k + 1] <= w[k] + tol, "increasing above the peak",
                              [&] { return describe(cell, {{"p", lo}, {"next", hi}}, std::nullopt, s1); });
                }
            }
            // Second differences on each positive piece: cases 2 and 6 are
            // convex, 3 and 7 concave (the beta pieces mirror the alpha ones).
            for (std::size_t k = 1; k + 1 < priors.size(); ++k) {
                const CaseId a = classify_case(priors[k - 1], info, s1);
                const CaseId b = classify_case(priors[k], info, s1);
                const CaseId d = classify_case(priors[k + 1], info, s1);
                if (a != b || b != d || !b.pays()) continue;
                const double f0 = case_cost(a, priors[k - 1], info, payoffs);
                const double f1 = case_cost(a, priors[k], info, payoffs);
                const double f2 = case_cost(a, priors[k + 1], info, payoffs);
                if (f0 <= 0.0 || f1 <= 0.0 || f2 <= 0.0) continue;
                const double second = f0 - 2.0 * f1 + f2;
                const bool concave = b.value() == 3 || b.value() == 7;
                const double slack = 1e-13 * cell.delta_u;
                rec.check(concave ? second <= slack : second >= -slack,
                          concave ? "piece is not concave" : "piece is not convex",
                          [&] {
                              return describe(cell, {{"p", priors[k]}, {"second_difference", second},
                                                     {"case", static_cast<double>(b.value())}},
                                              std::nullopt, s1);
                          });
            }
        }
    });
    return rec.take();
}

}  // namespace

GridSpec default_grid(TheoremId id) {
    GridSpec grid;
    switch (id) {
        case TheoremId::PbFeasibility:
            grid.prior_points = 101;
            grid.thetas = {{0.6, 0.8}, {0.55, 0.9}, {0.8, 0.6}};
            grid.costs = {0.05, 0.1, 0.2};
            grid.delta_us = {1.0};
            break;
        case TheoremId::SameAction:
        case TheoremId::NoSwap:
            grid.prior_points = 101;
            grid.thetas = {{0.6, 0.8}, {0.55, 0.9}, {0.8, 0.6}, {0.6, 0.95}, {0.7, 0.7}};
            grid.costs = {0.02, 0.05, 0.1, 0.2};
            grid.delta_us = {1.0};
            break;
        case TheoremId::Disconfirmation:
        case TheoremId::Confirmation:
        case TheoremId::Reaction:
            grid.prior_points = 1001;
            grid.thetas = theta_lattice();
            grid.costs = {0.02, 0.05, 0.1, 0.2};
            grid.delta_us = {1.0, 2.5};
            break;
        case TheoremId::OracleEquivalence:
            grid.prior_points = 1001;
            grid.thetas = theta_lattice();
            grid.delta_us = {0.5, 1.0, 3.0};
            grid.tolerance = 1e-10;
            break;
        case TheoremId::CostStructure:
            grid.prior_points = 1001;
            grid.thetas = theta_lattice();
            grid.delta_us = {0.5, 1.0, 3.0};
            break;
    }
    return grid;
}

std::vector<double> grid_priors(const GridSpec& grid) {
    if (grid.prior_points < 2) throw InvalidParameter("grid needs at least two priors");
    std::vector<double> out;
    const double top = 1.0 - grid.prior_offset;
    for (int k = 0; k < grid.prior_points; ++k) {
        const double p = static_cast<double>(k) / (grid.prior_points - 1) + grid.prior_offset;
        out.push_back(std::min(p, top));
    }
    return out;
}

TheoremReport grid_theorem_check(TheoremId id, const GridSpec& grid, const WtpFunction& wtp,
                                 std::size_t max_recorded) {
    const WtpFunction f = wtp ? wtp : WtpFunction(&willingness_to_pay);
    switch (id) {
        case TheoremId::PbFeasibility: return check_pb_feasibility(grid, f, max_recorded);
        case TheoremId::Disconfirmation: return check_disconfirmation(grid, max_recorded);
        case TheoremId::Confirmation:
            return check_individual(
                id, grid, max_recorded,
                [](double p, const ModelParameters& m, const Signal& s) { return cb_db_report(p, m, s); },
                [](double p, const ModelParameters& m, const Signal& s) {
                    return cb_db_characterized(p, m, s);
                },
                [](const CbDbReport& a, const CbDbReport& b) {
                    return a.confirmatory == b.confirmatory && a.disproving == b.disproving;
                },
                "confirmatory/disproving definition and characterization disagree");
        case TheoremId::Reaction:
            return check_individual(
                id, grid, max_recorded,
                [](double p, const ModelParameters& m, const Signal& s) { return reaction_report(p, m, s); },
                [](double p, const ModelParameters& m, const Signal& s) {
                    return reaction_characterized(p, m, s);
                },
                [](const ReactionReport& a, const ReactionReport& b) {
                    return a.underreaction == b.underreaction && a.overreaction == b.overreaction;
                },
                "under/over-reaction definition and characterization disagree");
        case TheoremId::SameAction: return check_same_action(grid, max_recorded);
        case TheoremId::NoSwap: return check_no_swap(grid, f, max_recorded);
        case TheoremId::OracleEquivalence: return check_oracle(grid, f, max_recorded);
        case TheoremId::CostStructure: return check_cost_structure(grid, f, max_recorded);
    }
    return {};
}

}  // namespace infoacq
