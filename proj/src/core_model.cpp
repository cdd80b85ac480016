#include "infoacq/core_model.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace infoacq {

double checked_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << what << " must lie in [0,1], got " << p;
        throw InvalidProbability(os.str());
    }
    return p;
}

const std::vector<Signal>& all_signals() {
    static const std::vector<Signal> signals = {
        {Component::Alpha, Component::Alpha},
        {Component::Alpha, Component::Beta},
        {Component::Beta, Component::Alpha},
        {Component::Beta, Component::Beta},
    };
    return signals;
}

std::string to_string(State s) { return s == State::A ? "A" : "B"; }

std::string to_string(Component s) { return s == Component::Alpha ? "alpha" : "beta"; }

std::string to_string(const Signal& s) {
    return "(" + to_string(s.first) + "," + to_string(s.second) + ")";
}

Component parse_component(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (t == "a" || t == "alpha") return Component::Alpha;
    if (t == "b" || t == "beta") return Component::Beta;
    throw InvalidParameter("unknown signal component '" + text + "'");
}

Signal parse_signal(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) {
            t.push_back(ch);
        }
    }
    const auto comma = t.find(',');
    if (comma != std::string::npos) {
        return {parse_component(t.substr(0, comma)), parse_component(t.substr(comma + 1))};
    }
    if (t.size() == 2) {
        return {parse_component(t.substr(0, 1)), parse_component(t.substr(1, 1))};
    }
    throw InvalidParameter("cannot parse signal '" + text + "'");
}

InformationStructure::InformationStructure(double theta1, double theta2)
    : theta1_(theta1), theta2_(theta2) {
    auto check = [](double theta, const char* name) {
        if (!(theta > 0.5 && theta < 1.0)) {
            std::ostringstream os;
            os << name << " must lie strictly between 1/2 and 1, got " << theta;
            throw InvalidParameter(os.str());
        }
    };
    check(theta1, "theta1");
    check(theta2, "theta2");
}

PayoffStructure::PayoffStructure(double u_correct, double u_wrong)
    : u_correct_(u_correct), u_wrong_(u_wrong) {
    if (!std::isfinite(u_correct) || !std::isfinite(u_wrong)) {
        throw InvalidParameter("utilities must be finite");
    }
    if (!(u_correct - u_wrong > 0.0)) {
        std::ostringstream os;
        os << "u_correct must exceed u_wrong, got " << u_correct << " <= " << u_wrong;
        throw InvalidParameter(os.str());
    }
}

BeliefState::BeliefState(double p, Provenance prov, std::optional<Component> s1,
                         std::optional<Component> s2)
    : prob_a_(checked_probability(p, "belief")), provenance_(prov), first_(s1), second_(s2) {}

BeliefState BeliefState::prior(double p) {
    return BeliefState(p, Provenance::Prior, std::nullopt, std::nullopt);
}

BeliefState BeliefState::after_first(double p, Component s1) {
    return BeliefState(p, Provenance::AfterFirst, s1, std::nullopt);
}

BeliefState BeliefState::after_both(double p, Component s1, Component s2) {
    return BeliefState(p, Provenance::AfterBoth, s1, s2);
}

BeliefState BeliefState::observe(const InformationStructure& info, Component s) const {
    switch (provenance_) {
        case Provenance::Prior:
            return after_first(bayes_update(prob_a_, info.theta1(), s), s);
        case Provenance::AfterFirst:
            return after_both(bayes_update(prob_a_, info.theta2(), s), *first_, s);
        case Provenance::AfterBoth:
            break;
    }
    throw DomainError("belief has already absorbed both signal components");
}

ModelParameters::ModelParameters(InformationStructure i, PayoffStructure u, double c)
    : info(i), payoffs(u), cost(c) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
        std::ostringstream os;
        os << "processing cost must be a nonnegative finite number, got " << c;
        throw InvalidParameter(os.str());
    }
}

Scenario::Scenario(ModelParameters params, std::vector<double> priors)
    : params_(params), priors_(std::move(priors)) {
    if (priors_.empty() || priors_.size() > 2) {
        throw InvalidParameter("a scenario holds one or two priors");
    }
    for (double p : priors_) checked_probability(p, "prior");
}

std::pair<double, double> Scenario::ordered_pair() const {
    if (priors_.size() != 2) throw OrderingError("pairwise operations need two priors");
    const double a = priors_[0];
    const double b = priors_[1];
    return a <= b ? std::pair{a, b} : std::pair{b, a};
}

double bayes_update(double p, double theta, Component s) {
    checked_probability(p, "prior");
    const double like_a = s == Component::Alpha ? theta : 1.0 - theta;
    const double like_b = 1.0 - like_a;
    return like_a * p / (like_a * p + like_b * (1.0 - p));
}

double posterior_after_first(double p, const InformationStructure& info, Component s1) {
    return bayes_update(p, info.theta1(), s1);
}

double posterior_after_both(double p, const InformationStructure& info, Component s1,
                            Component s2) {
    checked_probability(p, "prior");
    const double t1 = info.theta1();
    const double t2 = info.theta2();
    // Equally precise components that disagree cancel exactly.
    if (s1 != s2 && t1 == t2) return p;
    const double l1 = s1 == Component::Alpha ? t1 : 1.0 - t1;
    const double l2 = s2 == Component::Alpha ? t2 : 1.0 - t2;
    const double num = l1 * l2 * p;
    return num / (num + (1.0 - l1) * (1.0 - l2) * (1.0 - p));
}

double marginal_first(double p, const InformationStructure& info, Component s1) {
    checked_probability(p, "prior");
    const double t = info.theta1();
    const double pa = p * t + (1.0 - p) * (1.0 - t);
    return s1 == Component::Alpha ? pa : 1.0 - pa;
}

double conditional_second(double p_after_first, const InformationStructure& info,
                          Component s2) {
    checked_probability(p_after_first, "interim posterior");
    const double t = info.theta2();
    const double pa = p_after_first * t + (1.0 - p_after_first) * (1.0 - t);
    return s2 == Component::Alpha ? pa : 1.0 - pa;
}

double marginal_second(double p, const InformationStructure& info, Component s2) {
    return conditional_second(p, info, s2);
}

double signal_probability(double p, const InformationStructure& info, const Signal& s) {
    return marginal_first(p, info, s.first) *
           conditional_second(posterior_after_first(p, info, s.first), info, s.second);
}

std::uint64_t Rng::mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::split(std::uint64_t stream) const {
    return Rng(mix(seed_ ^ mix(stream + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Draw sample_state_and_signal(double p, const InformationStructure& info, Rng& rng) {
    checked_probability(p, "prior");
    const State state = rng.bernoulli(p) ? State::A : State::B;
    auto component = [&](double theta) {
        const bool matches = rng.bernoulli(theta);
        const bool alpha = (state == State::A) == matches;
        return alpha ? Component::Alpha : Component::Beta;
    };
    const Component s1 = component(info.theta1());
    const Component s2 = component(info.theta2());
    return {state, {s1, s2}};
}

Draw sample_state_and_signal(double p, const InformationStructure& info,
                             std::uint64_t seed) {
    Rng rng(seed);
    return sample_state_and_signal(p, info, rng);
}

}  // namespace infoacq
