#pragma once
// Willingness to pay for the second signal component.
//
// Priors are sorted into eight cases by which guesses remain optimal after
// each possible signal. Cases 1-4 apply after sigma_1 = alpha, cases 5-8
// after sigma_1 = beta. The willingness to pay c_{s1}(p) is zero in the
// outer cases (1, 4, 5, 8) and given by a rational function of p in the
// inner ones.

#include <array>
#include <cstdint>

#include "infoacq/core_model.hpp"

namespace infoacq {

// Case index in 1..8.
class CaseId {
public:
    explicit CaseId(int value);

    int value() const noexcept { return value_; }
    Component signal() const noexcept {
        return value_ <= 4 ? Component::Alpha : Component::Beta;
    }
    // Cases where the second component can change the optimal guess.
    bool pays() const noexcept { return value_ == 2 || value_ == 3 || value_ == 6 || value_ == 7; }

    friend bool operator==(const CaseId&, const CaseId&) = default;

private:
    int value_;
};

enum class Acquisition : std::uint8_t { Acquire, Skip };

std::string to_string(Acquisition a);

// [0, upper]: every processing cost a decision-maker would accept.
struct AdmissibleCostSet {
    double upper = 0.0;

    bool contains(double c) const noexcept { return c >= 0.0 && c <= upper; }
};

struct CaseInterval {
    CaseId id;
    double lower;
    double upper;
};

// The eight closed prior intervals, ordered by case number. Adjacent
// intervals for the same sigma_1 share an endpoint and tile [0,1].
std::array<CaseInterval, 8> case_intervals(const InformationStructure& info);

// At a shared endpoint (within tol) the lower-numbered case is returned.
CaseId classify_case(double p, const InformationStructure& info, Component s1,
                     double tol = kDefaultTolerance);

// The case formula evaluated directly, without range checks.
double case_cost(CaseId id, double p, const InformationStructure& info,
                 const PayoffStructure& payoffs);

// c_{s1}(p), clamped at zero from below.
double willingness_to_pay(double p, const InformationStructure& info,
                          const PayoffStructure& payoffs, Component s1);

// delta_u * (theta2 - 1/2), the largest value c_{s1} ever takes.
double max_willingness_to_pay(const InformationStructure& info,
                              const PayoffStructure& payoffs);

// Prior at which c_{s1} peaks: 1 - theta1 for alpha, theta1 for beta.
double peak_prior(const InformationStructure& info, Component s1);

AdmissibleCostSet admissible_costs(double p, const InformationStructure& info,
                                   const PayoffStructure& payoffs, Component s1);

// Acquire iff cost <= c_{s1}(p); indifference resolves to Acquire.
Acquisition acquisition_decision(double p, const InformationStructure& info,
                                 const PayoffStructure& payoffs, double cost, Component s1);
Acquisition acquisition_decision(double p, const ModelParameters& params, Component s1);
Acquisition acquisition_decision(double p, const Scenario& scenario, Component s1);

// Guess A above one half and B below. A posterior of exactly 1/2 guesses A;
// both guesses have equal expected utility there.
State optimal_guess(double prob_a);
State optimal_guess(const BeliefState& belief);

// Best expected utility of guessing without the second component.
double expected_utility_skip(double p_after_first, const PayoffStructure& payoffs);

}  // namespace infoacq
