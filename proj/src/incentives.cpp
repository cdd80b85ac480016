#include "infoacq/incentives.hpp"

#include <algorithm>
#include <string>

namespace infoacq {

namespace {

struct Thresholds {
    double alpha_low;   // case 4 | case 3
    double alpha_mid;   // case 3 | case 2  (1 - theta1)
    double alpha_high;  // case 2 | case 1
    double beta_low;    // case 5 | case 6
    double beta_mid;    // case 6 | case 7  (theta1)
    double beta_high;   // case 7 | case 8
};

Thresholds thresholds(const InformationStructure& info) {
    const double t1 = info.theta1();
    const double t2 = info.theta2();
    const double mixed = t1 + t2 - 2.0 * t1 * t2;       // P(components disagree | state)
    const double agree = 1.0 - t1 - t2 + 2.0 * t1 * t2;  // P(components agree | state)
    return {
        1.0 - t1 * t2 / agree, 1.0 - t1, t2 * (1.0 - t1) / mixed,
        t1 * (1.0 - t2) / mixed, t1, t1 * t2 / agree,
    };
}

}  // namespace

CaseId::CaseId(int value) : value_(value) {
    if (value < 1 || value > 8) {
        throw InvalidParameter("case id must be in 1..8, got " + std::to_string(value));
    }
}

std::string to_string(Acquisition a) { return a == Acquisition::Acquire ? "acquire" : "skip"; }

std::array<CaseInterval, 8> case_intervals(const InformationStructure& info) {
    const Thresholds t = thresholds(info);
    return {{
        {CaseId(1), t.alpha_high, 1.0},
        {CaseId(2), t.alpha_mid, t.alpha_high},
        {CaseId(3), t.alpha_low, t.alpha_mid},
        {CaseId(4), 0.0, t.alpha_low},
        {CaseId(5), 0.0, t.beta_low},
        {CaseId(6), t.beta_low, t.beta_mid},
        {CaseId(7), t.beta_mid, t.beta_high},
        {CaseId(8), t.beta_high, 1.0},
    }};
}

CaseId classify_case(double p, const InformationStructure& info, Component s1, double tol) {
    checked_probability(p, "prior");
    const Thresholds t = thresholds(info);
    if (s1 == Component::Alpha) {
        if (p >= t.alpha_high - tol) return CaseId(1);
        if (p >= t.alpha_mid - tol) return CaseId(2);
        if (p >= t.alpha_low - tol) return CaseId(3);
        return CaseId(4);
    }
    if (p <= t.beta_low + tol) return CaseId(5);
    if (p <= t.beta_mid + tol) return CaseId(6);
    if (p <= t.beta_high + tol) return CaseId(7);
    return CaseId(8);
}

double case_cost(CaseId id, double p, const InformationStructure& info,
                 const PayoffStructure& payoffs) {
    const double t1 = info.theta1();
    const double t2 = info.theta2();
    const double du = payoffs.delta_u();
    const double q = 1.0 - p;
    switch (id.value()) {
        case 2:
            return du * (t2 * q - t1 * p - t1 * t2 * (1.0 - 2.0 * p)) / (t1 * p + (1.0 - t1) * q);
        case 3:
            return du * (t1 * t2 * p - (1.0 - t1) * (1.0 - t2) * q) / (t1 * p + (1.0 - t1) * q);
        case 6:
            return du * ((1.0 - t1) * t2 * p - t1 * (1.0 - t2) * q) / ((1.0 - t1) * p + t1 * q);
        case 7:
            return du * (t1 * t2 * q - (1.0 - t1) * (1.0 - t2) * p) / ((1.0 - t1) * p + t1 * q);
        default:
            return 0.0;
    }
}

double willingness_to_pay(double p, const InformationStructure& info,
                          const PayoffStructure& payoffs, Component s1) {
    const CaseId id = classify_case(p, info, s1);
    return std::max(0.0, case_cost(id, p, info, payoffs));
}

double max_willingness_to_pay(const InformationStructure& info,
                              const PayoffStructure& payoffs) {
    return payoffs.delta_u() * (info.theta2() - 0.5);
}

double peak_prior(const InformationStructure& info, Component s1) {
    return s1 == Component::Alpha ? 1.0 - info.theta1() : info.theta1();
}

AdmissibleCostSet admissible_costs(double p, const InformationStructure& info,
                                   const PayoffStructure& payoffs, Component s1) {
    return {willingness_to_pay(p, info, payoffs, s1)};
}

Acquisition acquisition_decision(double p, const InformationStructure& info,
                                 const PayoffStructure& payoffs, double cost, Component s1) {
    return cost <= willingness_to_pay(p, info, payoffs, s1) ? Acquisition::Acquire
                                                            : Acquisition::Skip;
}

Acquisition acquisition_decision(double p, const ModelParameters& params, Component s1) {
    return acquisition_decision(p, params.info, params.payoffs, params.cost, s1);
}

Acquisition acquisition_decision(double p, const Scenario& scenario, Component s1) {
    return acquisition_decision(p, scenario.params(), s1);
}

State optimal_guess(double prob_a) {
    checked_probability(prob_a, "belief");
    return prob_a >= 0.5 ? State::A : State::B;
}

State optimal_guess(const BeliefState& belief) { return optimal_guess(belief.prob_a()); }

double expected_utility_skip(double p_after_first, const PayoffStructure& payoffs) {
    checked_probability(p_after_first, "interim posterior");
    const double hi = std::max(p_after_first, 1.0 - p_after_first);
    return hi * payoffs.u_correct() + (1.0 - hi) * payoffs.u_wrong();
}

}  // namespace infoacq
