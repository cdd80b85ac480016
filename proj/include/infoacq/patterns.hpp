#pragma once
// Belief patterns after optimal acquisition.
//
// Pairwise: divergence D = |p_i - p_j| - |p_i(s) - p_j(s)| and inversion
// I = (p_i - p_i(s)) (p_j - p_j(s)); polarization is D < 0 and I < 0.
// Individual: disconfirmation, confirmatory/disproving patterns and
// under/over-reaction.
//
// Each individual pattern has two evaluators. The *_report functions apply
// the defining inequalities to computed posteriors; the *_characterized
// functions use the closed-form conditions on theta, c and the signal. The
// verification suite checks that the two agree.

#include <optional>
#include <utility>

#include "infoacq/belief_sets.hpp"
#include "infoacq/core_model.hpp"
#include "infoacq/incentives.hpp"

namespace infoacq {

struct RealizedPosterior {
    double belief;       // p(sigma)
    Acquisition action;  // decision taken after sigma_1
};

// p(sigma) = p_{s1} if the decision-maker skips, p_{s1 s2} if she acquires.
RealizedPosterior realized_posterior(double p, const ModelParameters& params,
                                     const Signal& signal);

struct PairwiseOutcome {
    double divergence;
    double inversion;
    bool polarized;
    std::pair<double, double> realized_posteriors;
    std::pair<Acquisition, Acquisition> acquisition;

    bool diverging_attitudes() const noexcept { return divergence < 0.0; }
    bool inverse_updating() const noexcept { return inversion < 0.0; }
};

// Requires p_i <= p_j.
PairwiseOutcome pairwise_outcome(double p_i, double p_j, const ModelParameters& params,
                                 const Signal& signal);

struct PbFeasibility {
    bool feasible = false;
    bool via_alpha = false;  // (p_i, p_j) in B^{ij}_alpha(c), or V^{ij}_alpha without c
    bool via_beta = false;   // (p_i, p_j) in B^{ji}_beta(c), or V^{ji}_beta without c
    bool theta_condition = false;  // theta2 > theta1
};

// Whether polarization has positive probability for p_i < p_j, either at the
// given cost or (without one) at some cost. With a cost, the condition
// c < max{c_{s1}(p_i), c_{s1}(p_j)} is bound to the s1 of each disjunct.
// Degenerate priors (0 or 1) never move, so a pair containing one is never
// feasible.
PbFeasibility pb_feasible(double p_i, double p_j, const InformationStructure& info,
                          const PayoffStructure& payoffs, std::optional<double> c);

// Same test from precomputed willingness-to-pay values.
PbFeasibility pb_feasible(double p_i, double p_j, const WtpPair& wtp_i, const WtpPair& wtp_j,
                          const InformationStructure& info, std::optional<double> c);

// Ex-ante probability of polarization under the closed form
//   Pr(s1=alpha) Pr(s2=beta) 1{B^{ij}_alpha} + Pr(s1=beta) Pr(s2=alpha) 1{B^{ji}_beta}
// with each component's marginal evaluated at the subjective probability.
// Zero when the pair cannot polarize at cost c.
double pb_probability(double p_subjective, double p_i, double p_j,
                      const InformationStructure& info, const PayoffStructure& payoffs,
                      double c);

// Same indicators weighted by the joint probability of the two signal
// realizations. The components are independent only conditional on the
// state, so this differs from pb_probability unless p_subjective is 0 or 1.
double pb_probability_joint(double p_subjective, double p_i, double p_j,
                            const InformationStructure& info, const PayoffStructure& payoffs,
                            double c);

// Priors p_j that polarize with p_i at cost c, as a union of open intervals.
// Requires p_i in (0,1), 0 < c < delta_u (theta2 - 1/2) and theta2 > theta1.
IntervalSet polarization_partners(double p_i, double c, const InformationStructure& info,
                                  const PayoffStructure& payoffs);

struct DisconfirmationReport {
    bool tendency = false;
    bool exhibits = false;
    double wtp_alpha = 0.0;
    double wtp_beta = 0.0;
};

// From the definitions: favoring A, tendency means c_beta(p) > c_alpha(p)
// and exhibiting means acquiring after beta but not after alpha (mirrored
// when favoring B). A prior of 1/2 favors neither state.
DisconfirmationReport disconfirmation_report(double p, const InformationStructure& info,
                                             const PayoffStructure& payoffs, double c);
DisconfirmationReport disconfirmation_characterized(double p, const InformationStructure& info,
                                                    const PayoffStructure& payoffs, double c);

struct CbDbReport {
    bool confirmatory = false;
    bool disproving = false;
};

// Throws DomainError at p = 1/2.
CbDbReport cb_db_report(double p, const ModelParameters& params, const Signal& signal);
CbDbReport cb_db_characterized(double p, const ModelParameters& params, const Signal& signal);

struct ReactionReport {
    bool underreaction = false;
    bool overreaction = false;
};

ReactionReport reaction_report(double p, const ModelParameters& params, const Signal& signal);
ReactionReport reaction_characterized(double p, const ModelParameters& params,
                                      const Signal& signal);

// All individual verdicts for one prior and signal, with the numbers behind
// them.
struct PatternReport {
    bool disconfirmation_tendency = false;
    bool exhibits_disconfirmation = false;
    bool confirmatory = false;
    bool disproving = false;
    bool underreaction = false;
    bool overreaction = false;

    double prior = 0.0;
    double interim_posterior = 0.0;  // p_{s1}
    double full_posterior = 0.0;     // p_{s1 s2}
    double realized = 0.0;           // p(sigma)
    Acquisition action = Acquisition::Skip;
    double wtp_alpha = 0.0;
    double wtp_beta = 0.0;
};

PatternReport pattern_report(double p, const ModelParameters& params, const Signal& signal);

}  // namespace infoacq
