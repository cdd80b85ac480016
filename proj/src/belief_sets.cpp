#include "infoacq/belief_sets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace infoacq {

ProbabilityInterval ProbabilityInterval::empty() { return ProbabilityInterval(); }

ProbabilityInterval ProbabilityInterval::make(double lower, double upper, bool lower_closed,
                                              bool upper_closed) {
    ProbabilityInterval out;
    if (lower > upper || (lower == upper && !(lower_closed && upper_closed))) return out;
    out.empty_ = false;
    out.lower_ = lower;
    out.upper_ = upper;
    out.lower_closed_ = lower_closed;
    out.upper_closed_ = upper_closed;
    return out;
}

ProbabilityInterval ProbabilityInterval::open(double lower, double upper) {
    return make(lower, upper, false, false);
}

ProbabilityInterval ProbabilityInterval::closed(double lower, double upper) {
    return make(lower, upper, true, true);
}

bool ProbabilityInterval::contains(double p) const noexcept {
    if (empty_) return false;
    const bool above = lower_closed_ ? p >= lower_ : p > lower_;
    const bool below = upper_closed_ ? p <= upper_ : p < upper_;
    return above && below;
}

std::string ProbabilityInterval::to_string() const {
    if (empty_) return "{}";
    std::ostringstream os;
    os.precision(12);
    os << (lower_closed_ ? '[' : '(') << lower_ << ", " << upper_ << (upper_closed_ ? ']' : ')');
    return os.str();
}

IntervalSet::IntervalSet(std::vector<ProbabilityInterval> parts) {
    for (const auto& part : parts) add(part);
}

void IntervalSet::add(const ProbabilityInterval& part) {
    if (part.is_empty()) return;
    parts_.push_back(part);
    std::sort(parts_.begin(), parts_.end(), [](const auto& a, const auto& b) {
        if (a.lower() != b.lower()) return a.lower() < b.lower();
        return a.lower_closed() && !b.lower_closed();
    });
    std::vector<ProbabilityInterval> merged;
    for (const auto& next : parts_) {
        if (merged.empty()) {
            merged.push_back(next);
            continue;
        }
        const auto& last = merged.back();
        const bool touches =
            next.lower() < last.upper() ||
            (next.lower() == last.upper() && (last.upper_closed() || next.lower_closed()));
        if (!touches) {
            merged.push_back(next);
            continue;
        }
        double upper = last.upper();
        bool upper_closed = last.upper_closed();
        if (next.upper() > upper) {
            upper = next.upper();
            upper_closed = next.upper_closed();
        } else if (next.upper() == upper) {
            upper_closed = upper_closed || next.upper_closed();
        }
        merged.back() = ProbabilityInterval::make(last.lower(), upper, last.lower_closed(),
                                                  upper_closed);
    }
    parts_ = std::move(merged);
}

bool IntervalSet::contains(double p) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(),
                       [p](const auto& part) { return part.contains(p); });
}

IntervalSet IntervalSet::complement() const {
    IntervalSet out;
    double cursor = 0.0;
    bool cursor_closed = true;
    for (const auto& part : parts_) {
        out.add(ProbabilityInterval::make(cursor, part.lower(), cursor_closed,
                                          !part.lower_closed()));
        cursor = part.upper();
        cursor_closed = !part.upper_closed();
    }
    out.add(ProbabilityInterval::make(cursor, 1.0, cursor_closed, true));
    return out;
}

std::string IntervalSet::to_string() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (const auto& part : parts_) {
        if (!out.empty()) out += " U ";
        out += part.to_string();
    }
    return out;
}

CostThresholds inverse_thresholds(double c, const InformationStructure& info,
                                  const PayoffStructure& payoffs, Component s1) {
    const double t1 = info.theta1();
    const double t2 = info.theta2();
    const double du = payoffs.delta_u();
    const double mixed = t1 + t2 - 2.0 * t1 * t2;
    const double slope = (2.0 * t1 - 1.0) * c;
    if (s1 == Component::Alpha) {
        return {(1.0 - t1) * (du * (t2 - 1.0) - c) / (du * (mixed - 1.0) + slope),
                (1.0 - t1) * (du * t2 - c) / (du * mixed + slope)};
    }
    return {t1 * (c + du * (1.0 - t2)) / (du * mixed + slope),
            t1 * (c - du * t2) / (du * (mixed - 1.0) + slope)};
}

ProbabilityInterval h_set(double c, const InformationStructure& info,
                          const PayoffStructure& payoffs, Component s1) {
    if (!(c >= 0.0)) throw InvalidParameter("processing cost must be nonnegative");
    if (c >= max_willingness_to_pay(info, payoffs)) return ProbabilityInterval::empty();
    const auto q = inverse_thresholds(c, info, payoffs, s1);
    return ProbabilityInterval::open(q.lower, q.upper);
}

ExtremeSets extreme_sets(const InformationStructure& info) {
    const double t1 = info.theta1();
    const double t2 = info.theta2();
    const double mixed = t1 + t2 - 2.0 * t1 * t2;
    const double agree = 1.0 - t1 - t2 + 2.0 * t1 * t2;
    ExtremeSets out{
        ProbabilityInterval::open((t1 - 1.0) * (t2 - 1.0) / agree, (1.0 - t1) * t2 / mixed),
        ProbabilityInterval::open(t1 * (1.0 - t2) / mixed, t1 * t2 / agree),
        {},
        {},
    };
    out.non_extreme.add(out.non_extreme_alpha);
    out.non_extreme.add(out.non_extreme_beta);
    out.extreme = out.non_extreme.complement();
    return out;
}

ReciprocalPartner reciprocal_partner(double p_i, const InformationStructure& info,
                                     const PayoffStructure& payoffs, Component s1) {
    checked_probability(p_i, "prior");
    const auto ne = h_set(0.0, info, payoffs, s1);
    if (!ne.contains(p_i)) {
        std::ostringstream os;
        os << "prior " << p_i << " is extreme after " << to_string(s1) << "; non-extreme set is "
           << ne.to_string();
        throw DomainError(os.str());
    }
    const double peak = peak_prior(info, s1);
    if (std::abs(p_i - peak) <= kDefaultTolerance) return {p_i, true};

    const double target = willingness_to_pay(p_i, info, payoffs, s1);
    // Bracket on the branch opposite p_i; f changes sign across it.
    double lo = p_i < peak ? peak : ne.lower();
    double hi = p_i < peak ? ne.upper() : peak;
    const bool decreasing = p_i < peak;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = willingness_to_pay(mid, info, payoffs, s1) - target;
        if ((f > 0.0) == decreasing) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), false};
}

WtpPair wtp_pair(double p, const InformationStructure& info, const PayoffStructure& payoffs) {
    return {willingness_to_pay(p, info, payoffs, Component::Alpha),
            willingness_to_pay(p, info, payoffs, Component::Beta)};
}

PairClass classify_pair(const WtpPair& wtp_i, const WtpPair& wtp_j, double c) {
    auto acquires = [c](double wtp) { return c <= wtp; };
    PairClass out;
    out.in_B_ij_alpha = acquires(wtp_i.alpha) && !acquires(wtp_j.alpha);
    out.in_B_ji_alpha = acquires(wtp_j.alpha) && !acquires(wtp_i.alpha);
    out.in_B_ij_beta = acquires(wtp_i.beta) && !acquires(wtp_j.beta);
    out.in_B_ji_beta = acquires(wtp_j.beta) && !acquires(wtp_i.beta);
    out.in_V_ij_alpha = wtp_i.alpha > wtp_j.alpha;
    out.in_V_ji_alpha = wtp_j.alpha > wtp_i.alpha;
    out.in_V_ij_beta = wtp_i.beta > wtp_j.beta;
    out.in_V_ji_beta = wtp_j.beta > wtp_i.beta;
    return out;
}

PairClass classify_pair(double p_i, double p_j, double c, const InformationStructure& info,
                        const PayoffStructure& payoffs) {
    checked_probability(p_i, "p_i");
    checked_probability(p_j, "p_j");
    if (p_i > p_j) throw OrderingError("classify_pair expects p_i <= p_j");
    if (!(c >= 0.0)) throw InvalidParameter("processing cost must be nonnegative");
    return classify_pair(wtp_pair(p_i, info, payoffs), wtp_pair(p_j, info, payoffs), c);
}

ReciprocityReport reciprocity_check(double p_i, double p_j, const InformationStructure& info,
                          const PayoffStructure& payoffs, double tol) {
    checked_probability(p_i, "p_i");
    checked_probability(p_j, "p_j");
    if (p_i == p_j) throw InvalidParameter("reciprocity_check needs two distinct priors");
    ReciprocityReport out{wtp_pair(p_i, info, payoffs), wtp_pair(p_j, info, payoffs), false, false,
                     true};
    auto reciprocal = [&](Component s1) {
        const auto ne = h_set(0.0, info, payoffs, s1);
        return ne.contains(p_i) && ne.contains(p_j) &&
               std::abs(out.wtp_i.at(s1) - out.wtp_j.at(s1)) <= tol;
    };
    out.reciprocal_alpha = reciprocal(Component::Alpha);
    out.reciprocal_beta = reciprocal(Component::Beta);
    out.holds = !(out.reciprocal_alpha && out.reciprocal_beta);
    return out;
}

}  // namespace infoacq
