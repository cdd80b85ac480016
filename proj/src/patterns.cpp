#include "infoacq/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace infoacq {

namespace {

bool interior(double p) { return p > 0.0 && p < 1.0; }

}  // namespace

RealizedPosterior realized_posterior(double p, const ModelParameters& params,
                                     const Signal& signal) {
    const Acquisition action = acquisition_decision(p, params, signal.first);
    const double belief = action == Acquisition::Acquire
                              ? posterior_after_both(p, params.info, signal.first, signal.second)
                              : posterior_after_first(p, params.info, signal.first);
    return {belief, action};
}

PairwiseOutcome pairwise_outcome(double p_i, double p_j, const ModelParameters& params,
                                 const Signal& signal) {
    checked_probability(p_i, "p_i");
    checked_probability(p_j, "p_j");
    if (p_i > p_j) throw OrderingError("pairwise_outcome expects p_i <= p_j");
    const auto ri = realized_posterior(p_i, params, signal);
    const auto rj = realized_posterior(p_j, params, signal);
    PairwiseOutcome out;
    out.divergence = std::abs(p_i - p_j) - std::abs(ri.belief - rj.belief);
    out.inversion = (p_i - ri.belief) * (p_j - rj.belief);
    out.polarized = out.divergence < 0.0 && out.inversion < 0.0;
    out.realized_posteriors = {ri.belief, rj.belief};
    out.acquisition = {ri.action, rj.action};
    return out;
}

PbFeasibility pb_feasible(double p_i, double p_j, const WtpPair& wtp_i, const WtpPair& wtp_j,
                          const InformationStructure& info, std::optional<double> c) {
    checked_probability(p_i, "p_i");
    checked_probability(p_j, "p_j");
    if (!(p_i < p_j)) throw OrderingError("pb_feasible expects p_i < p_j");
    PbFeasibility out;
    out.theta_condition = info.theta2() > info.theta1();
    if (c) {
        if (!(*c >= 0.0)) throw InvalidParameter("processing cost must be nonnegative");
        const PairClass pc = classify_pair(wtp_i, wtp_j, *c);
        out.via_alpha = pc.in_B_ij_alpha && *c < std::max(wtp_i.alpha, wtp_j.alpha);
        out.via_beta = pc.in_B_ji_beta && *c < std::max(wtp_i.beta, wtp_j.beta);
    } else {
        out.via_alpha = wtp_i.alpha > wtp_j.alpha;
        out.via_beta = wtp_j.beta > wtp_i.beta;
    }
    out.feasible = out.theta_condition && interior(p_i) && interior(p_j) &&
                   (out.via_alpha || out.via_beta);
    return out;
}

PbFeasibility pb_feasible(double p_i, double p_j, const InformationStructure& info,
                          const PayoffStructure& payoffs, std::optional<double> c) {
    checked_probability(p_i, "p_i");
    checked_probability(p_j, "p_j");
    return pb_feasible(p_i, p_j, wtp_pair(p_i, info, payoffs), wtp_pair(p_j, info, payoffs), info,
                       c);
}

double pb_probability(double p_subjective, double p_i, double p_j,
                      const InformationStructure& info, const PayoffStructure& payoffs,
                      double c) {
    checked_probability(p_subjective, "subjective probability");
    const auto f = pb_feasible(p_i, p_j, info, payoffs, c);
    if (!f.feasible) return 0.0;
    double out = 0.0;
    if (f.via_alpha) {
        out += marginal_first(p_subjective, info, Component::Alpha) *
               marginal_second(p_subjective, info, Component::Beta);
    }
    if (f.via_beta) {
        out += marginal_first(p_subjective, info, Component::Beta) *
               marginal_second(p_subjective, info, Component::Alpha);
    }
    return out;
}

double pb_probability_joint(double p_subjective, double p_i, double p_j,
                            const InformationStructure& info, const PayoffStructure& payoffs,
                            double c) {
    checked_probability(p_subjective, "subjective probability");
    const auto f = pb_feasible(p_i, p_j, info, payoffs, c);
    if (!f.feasible) return 0.0;
    double out = 0.0;
    if (f.via_alpha) {
        out += signal_probability(p_subjective, info, {Component::Alpha, Component::Beta});
    }
    if (f.via_beta) {
        out += signal_probability(p_subjective, info, {Component::Beta, Component::Alpha});
    }
    return out;
}

IntervalSet polarization_partners(double p_i, double c, const InformationStructure& info,
                                  const PayoffStructure& payoffs) {
    checked_probability(p_i, "p_i");
    if (!interior(p_i)) throw DomainError("polarization partners need p_i in (0,1)");
    if (!(info.theta2() > info.theta1())) {
        throw DomainError("polarization needs theta2 > theta1");
    }
    const double cap = max_willingness_to_pay(info, payoffs);
    if (!(c > 0.0 && c < cap)) {
        std::ostringstream os;
        os << "cost must lie in (0, " << cap << "), got " << c;
        throw DomainError(os.str());
    }
    const auto ha = h_set(c, info, payoffs, Component::Alpha);
    const auto hb = h_set(c, info, payoffs, Component::Beta);

    IntervalSet out;
    // After alpha the lower prior must acquire and the upper must not.
    if (ha.contains(p_i)) out.add(ProbabilityInterval::open(ha.upper(), 1.0));
    if (p_i > ha.upper()) out.add(ha);
    // After beta the upper prior must acquire and the lower must not.
    if (p_i < hb.lower()) out.add(hb);
    if (hb.contains(p_i)) out.add(ProbabilityInterval::open(0.0, hb.lower()));
    return out;
}

DisconfirmationReport disconfirmation_report(double p, const InformationStructure& info,
                                             const PayoffStructure& payoffs, double c) {
    checked_probability(p, "prior");
    DisconfirmationReport out;
    out.wtp_alpha = willingness_to_pay(p, info, payoffs, Component::Alpha);
    out.wtp_beta = willingness_to_pay(p, info, payoffs, Component::Beta);
    if (p == 0.5) return out;
    // The contradicting realization is the one against the favored state.
    const Component against = p > 0.5 ? Component::Beta : Component::Alpha;
    const Component toward = opposite(against);
    const double wtp_against = against == Component::Alpha ? out.wtp_alpha : out.wtp_beta;
    const double wtp_toward = toward == Component::Alpha ? out.wtp_alpha : out.wtp_beta;
    out.tendency = wtp_against > wtp_toward;
    out.exhibits = acquisition_decision(p, info, payoffs, c, against) == Acquisition::Acquire &&
                   acquisition_decision(p, info, payoffs, c, toward) == Acquisition::Skip;
    return out;
}

DisconfirmationReport disconfirmation_characterized(double p, const InformationStructure& info,
                                                    const PayoffStructure& payoffs, double c) {
    checked_probability(p, "prior");
    DisconfirmationReport out;
    out.wtp_alpha = willingness_to_pay(p, info, payoffs, Component::Alpha);
    out.wtp_beta = willingness_to_pay(p, info, payoffs, Component::Beta);
    out.tendency = p != 0.5 && extreme_sets(info).non_extreme.contains(p);
    if (p > 0.5) {
        out.exhibits = out.wtp_beta > c && c > out.wtp_alpha;
    } else if (p < 0.5) {
        out.exhibits = out.wtp_alpha > c && c > out.wtp_beta;
    }
    return out;
}

CbDbReport cb_db_report(double p, const ModelParameters& params, const Signal& signal) {
    checked_probability(p, "prior");
    if (p == 0.5) throw DomainError("confirmatory patterns need a prior that favors a state");
    const double full = posterior_after_both(p, params.info, signal.first, signal.second);
    const double real = realized_posterior(p, params, signal).belief;
    CbDbReport out;
    if (p > 0.5) {
        out.confirmatory = full < p && p < real;
        out.disproving = real < p && p < full;
    } else {
        out.confirmatory = real < p && p < full;
        out.disproving = full < p && p < real;
    }
    return out;
}

CbDbReport cb_db_characterized(double p, const ModelParameters& params, const Signal& signal) {
    checked_probability(p, "prior");
    if (p == 0.5) throw DomainError("confirmatory patterns need a prior that favors a state");
    CbDbReport out;
    if (!interior(p)) return out;
    const bool informative_second = params.info.theta2() > params.info.theta1();
    const bool skips =
        params.cost > willingness_to_pay(p, params.info, params.payoffs, signal.first);
    if (!informative_second || !skips) return out;
    const Signal ab{Component::Alpha, Component::Beta};
    const Signal ba{Component::Beta, Component::Alpha};
    out.confirmatory = signal == (p > 0.5 ? ab : ba);
    out.disproving = signal == (p > 0.5 ? ba : ab);
    return out;
}

ReactionReport reaction_report(double p, const ModelParameters& params, const Signal& signal) {
    checked_probability(p, "prior");
    const double full = posterior_after_both(p, params.info, signal.first, signal.second);
    const double real = realized_posterior(p, params, signal).belief;
    ReactionReport out;
    out.underreaction = (p < real && real < full) || (full < real && real < p);
    out.overreaction = (p < full && full < real) || (real < full && full < p);
    return out;
}

ReactionReport reaction_characterized(double p, const ModelParameters& params,
                                      const Signal& signal) {
    checked_probability(p, "prior");
    ReactionReport out;
    if (!interior(p)) return out;
    const bool skips =
        params.cost > willingness_to_pay(p, params.info, params.payoffs, signal.first);
    const bool agree = signal.first == signal.second;
    out.underreaction = agree && skips;
    out.overreaction = !agree && skips && params.info.theta2() < params.info.theta1();
    return out;
}

PatternReport pattern_report(double p, const ModelParameters& params, const Signal& signal) {
    checked_probability(p, "prior");
    PatternReport out;
    const auto dis = disconfirmation_report(p, params.info, params.payoffs, params.cost);
    out.disconfirmation_tendency = dis.tendency;
    out.exhibits_disconfirmation = dis.exhibits;
    out.wtp_alpha = dis.wtp_alpha;
    out.wtp_beta = dis.wtp_beta;
    if (p != 0.5) {
        const auto cb = cb_db_report(p, params, signal);
        out.confirmatory = cb.confirmatory;
        out.disproving = cb.disproving;
    }
    const auto reaction = reaction_report(p, params, signal);
    out.underreaction = reaction.underreaction;
    out.overreaction = reaction.overreaction;
    const auto realized = realized_posterior(p, params, signal);
    out.prior = p;
    out.interim_posterior = posterior_after_first(p, params.info, signal.first);
    out.full_posterior = posterior_after_both(p, params.info, signal.first, signal.second);
    out.realized = realized.belief;
    out.action = realized.action;
    return out;
}

}  // namespace infoacq
