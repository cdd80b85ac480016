#pragma once
// Sets of priors induced by the willingness-to-pay function: acquisition
// sets H_{s1}(c), extreme and non-extreme beliefs, reciprocal partners and
// the pairwise B/V memberships.

#include <optional>
#include <string>
#include <vector>

#include "infoacq/core_model.hpp"
#include "infoacq/incentives.hpp"

namespace infoacq {

// Subinterval of [0,1]. Emptiness is a state of its own.
class ProbabilityInterval {
public:
    static ProbabilityInterval empty();
    static ProbabilityInterval open(double lower, double upper);
    static ProbabilityInterval closed(double lower, double upper);
    static ProbabilityInterval make(double lower, double upper, bool lower_closed,
                                    bool upper_closed);

    bool is_empty() const noexcept { return empty_; }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    bool lower_closed() const noexcept { return lower_closed_; }
    bool upper_closed() const noexcept { return upper_closed_; }

    bool contains(double p) const noexcept;
    std::string to_string() const;

    friend bool operator==(const ProbabilityInterval&, const ProbabilityInterval&) = default;

private:
    ProbabilityInterval() = default;

    bool empty_ = true;
    double lower_ = 0.0;
    double upper_ = 0.0;
    bool lower_closed_ = false;
    bool upper_closed_ = false;
};

// Finite union of disjoint intervals, kept sorted and merged.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<ProbabilityInterval> parts);

    void add(const ProbabilityInterval& part);

    const std::vector<ProbabilityInterval>& parts() const noexcept { return parts_; }
    bool is_empty() const noexcept { return parts_.empty(); }
    bool contains(double p) const noexcept;
    bool is_convex() const noexcept { return parts_.size() <= 1; }

    // Complement within [0,1].
    IntervalSet complement() const;
    std::string to_string() const;

private:
    std::vector<ProbabilityInterval> parts_;
};

struct ExtremeSets {
    ProbabilityInterval non_extreme_alpha;
    ProbabilityInterval non_extreme_beta;
    IntervalSet non_extreme;
    IntervalSet extreme;

    bool is_extreme(double p) const noexcept { return extreme.contains(p); }
};

// Threshold pair (lower, upper) where c_{s1} crosses c, from the closed-form
// inversion of the cost function. Only meaningful for 0 <= c < max WTP.
struct CostThresholds {
    double lower;
    double upper;
};
CostThresholds inverse_thresholds(double c, const InformationStructure& info,
                                  const PayoffStructure& payoffs, Component s1);

// Priors strictly willing to pay c after s1: the open interval
// (q_low(c), q_high(c)), empty once c >= delta_u (theta2 - 1/2).
//
// H is defined with a strict inequality while acquisition uses a weak one,
// so a prior sitting exactly on an endpoint acquires but is not in H.
ProbabilityInterval h_set(double c, const InformationStructure& info,
                          const PayoffStructure& payoffs, Component s1);

ExtremeSets extreme_sets(const InformationStructure& info);

struct ReciprocalPartner {
    double prior;
    bool degenerate;  // p_i sits on the peak and is its own partner
};

// The other prior in the non-extreme set with the same willingness to pay,
// found by bisection on the opposite monotone branch. Throws DomainError if
// p_i is outside the non-extreme set for s1.
ReciprocalPartner reciprocal_partner(double p_i, const InformationStructure& info,
                                     const PayoffStructure& payoffs, Component s1);

// Memberships for an ordered pair p_i <= p_j at cost c. B_kl: k acquires and
// l does not (weak acquisition rule). V_kl: c_{s1}(p_k) > c_{s1}(p_l).
struct PairClass {
    bool in_B_ij_alpha = false;
    bool in_B_ji_beta = false;
    bool in_B_ji_alpha = false;
    bool in_B_ij_beta = false;
    bool in_V_ij_alpha = false;
    bool in_V_ji_beta = false;
    bool in_V_ji_alpha = false;
    bool in_V_ij_beta = false;
};

// Willingness to pay of one prior after each first component.
struct WtpPair {
    double alpha;
    double beta;

    double at(Component s1) const noexcept { return s1 == Component::Alpha ? alpha : beta; }
};

WtpPair wtp_pair(double p, const InformationStructure& info, const PayoffStructure& payoffs);

PairClass classify_pair(double p_i, double p_j, double c, const InformationStructure& info,
                        const PayoffStructure& payoffs);
PairClass classify_pair(const WtpPair& wtp_i, const WtpPair& wtp_j, double c);

struct ReciprocityReport {
    WtpPair wtp_i;
    WtpPair wtp_j;
    bool reciprocal_alpha;
    bool reciprocal_beta;
    bool holds;  // never reciprocal for both realizations
};

// Diagnostic for distinct priors: reciprocity after one first component
// rules it out after the other. Equal WTP is judged within tol.
ReciprocityReport reciprocity_check(double p_i, double p_j, const InformationStructure& info,
                          const PayoffStructure& payoffs, double tol = 1e-9);

}  // namespace infoacq
