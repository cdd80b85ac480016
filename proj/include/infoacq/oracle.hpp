#pragma once
// Ground truth for the closed forms.
//
// brute_force_voi enumerates the joint distribution of (state, second
// component) directly from the precisions and picks optimal guesses from
// raw posteriors; it shares no code with the case classification.
// mc_pattern_frequency samples states and signals and evaluates a pattern
// predicate on each draw. grid_theorem_check sweeps parameter grids and
// reports every cell where a structural claim fails.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infoacq/core_model.hpp"

namespace infoacq {

struct OutcomeRow {
    State state;
    Component second;
    double probability;       // P(state, second | first)
    double utility_acquire;   // payoff of the guess made after both components
    double utility_skip;      // payoff of the guess made after the first only
};

struct OutcomeTable {
    Component first;
    std::vector<OutcomeRow> entries;

    double total_probability() const;
    double expected_acquire() const;
    double expected_skip() const;
};

OutcomeTable outcome_table(double p, const InformationStructure& info,
                           const PayoffStructure& payoffs, Component s1);

// Expected gain from observing the second component after s1. Never negative.
double brute_force_voi(double p, const InformationStructure& info,
                       const PayoffStructure& payoffs, Component s1);

// Monte Carlo -----------------------------------------------------------------

enum class PatternId : std::uint8_t { PB, DA, IU, CB, DB, UR, OR };

std::string to_string(PatternId id);
PatternId parse_pattern(const std::string& text);  // throws InvalidParameter
bool is_pairwise(PatternId id);

struct MonteCarloEstimate {
    double frequency = 0.0;
    double standard_error = 0.0;
    std::uint64_t draws = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
};

// Which of the four signal realizations (in all_signals() order) satisfy the
// pattern. Pairwise patterns use (p_i, p_j) sorted; individual patterns use
// p_i only.
std::vector<bool> pattern_signals(PatternId pattern, double p_i, std::optional<double> p_j,
                                  const ModelParameters& params);

// Exact probability of the pattern: sum of signal probabilities under the
// subjective prior over the realizations that satisfy it.
double pattern_probability(PatternId pattern, double p_subjective, double p_i,
                           std::optional<double> p_j, const ModelParameters& params);

// Draws (state, signal) under p_subjective and counts the draws whose
// signal satisfies the pattern. Work is split in fixed-size shards with
// seeds derived from `seed`, so the result does not depend on `threads`
// (0 = hardware concurrency).
MonteCarloEstimate mc_pattern_frequency(PatternId pattern, double p_subjective, double p_i,
                                        std::optional<double> p_j,
                                        const ModelParameters& params, std::uint64_t draws,
                                        std::uint64_t seed, unsigned threads = 0);

// Grid theorem checks ---------------------------------------------------------

enum class TheoremId : std::uint8_t {
    PbFeasibility,      // pb_feasible <=> some realization polarizes
    Disconfirmation,    // disconfirmation: definition vs characterization
    Confirmation,       // confirmatory / disproving patterns
    Reaction,           // under / over-reaction
    SameAction,         // same action after s1 => I >= 0
    NoSwap,             // no diverging attitudes on the V sets
    OracleEquivalence,  // closed-form WTP == brute-force VOI
    CostStructure,      // symmetry, peak, monotonicity and curvature of WTP
};

std::string to_string(TheoremId id);
TheoremId parse_theorem(const std::string& text);
const std::vector<TheoremId>& all_theorems();

using WtpFunction =
    std::function<double(double, const InformationStructure&, const PayoffStructure&, Component)>;

struct GridSpec {
    int prior_points = 101;  // priors k/(n-1) shifted by prior_offset, clamped to (0,1)
    double prior_offset = 1e-7;
    std::vector<std::pair<double, double>> thetas;
    std::vector<double> costs;
    std::vector<double> delta_us;
    double boundary_exclusion = 1e-9;  // skip cells with |WTP - c| below this
    double tolerance = 1e-12;          // numeric slack for the checked claim
};

GridSpec default_grid(TheoremId id);
std::vector<double> grid_priors(const GridSpec& grid);

struct Violation {
    std::string claim;
    std::string tuple;  // every parameter needed to reproduce the cell
};

struct TheoremReport {
    TheoremId theorem;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;  // first max_recorded only

    bool ok() const noexcept { return violation_count == 0; }
};

// The closed-form side of each comparison uses `wtp` (willingness_to_pay by
// default) so a deliberately broken cost function can be injected.
TheoremReport grid_theorem_check(TheoremId id, const GridSpec& grid,
                                 const WtpFunction& wtp = {}, std::size_t max_recorded = 50);

}  // namespace infoacq
