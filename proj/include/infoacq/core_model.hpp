#pragma once
// Primitive types of the two-state, two-component signal model and the
// Bayesian updating formulas built on them.
//
// States are {A, B}. A signal has two binary components, each equal to
// alpha (evidence for A) or beta (evidence for B). Component k matches the
// true state with probability theta_k, independently across components
// given the state. All probabilities are expressed as P(state = A).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infoacq {

// Absolute tolerance used when comparing beliefs against thresholds.
inline constexpr double kDefaultTolerance = 1e-12;

// Errors ---------------------------------------------------------------------

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidProbability : public ModelError {
public:
    using ModelError::ModelError;
};

class InvalidParameter : public ModelError {
public:
    using ModelError::ModelError;
};

class DomainError : public ModelError {
public:
    using ModelError::ModelError;
};

class OrderingError : public ModelError {
public:
    using ModelError::ModelError;
};

// Throws InvalidProbability unless 0 <= p <= 1 (NaN rejected). Returns p.
double checked_probability(double p, const char* what = "probability");

// Domain types ---------------------------------------------------------------

enum class State : std::uint8_t { A, B };
enum class Component : std::uint8_t { Alpha, Beta };

constexpr Component opposite(Component s) noexcept {
    return s == Component::Alpha ? Component::Beta : Component::Alpha;
}

struct Signal {
    Component first = Component::Alpha;
    Component second = Component::Alpha;

    friend bool operator==(const Signal&, const Signal&) = default;
};

// The four realizations in a fixed order: aa, ab, ba, bb.
const std::vector<Signal>& all_signals();

std::string to_string(State s);
std::string to_string(Component s);
std::string to_string(const Signal& s);  // e.g. "(alpha,beta)"
Component parse_component(const std::string& text);
Signal parse_signal(const std::string& text);  // "ab", "alpha,beta", "(a,b)"

// Precisions of the two signal components. Both strictly in (1/2, 1).
class InformationStructure {
public:
    InformationStructure(double theta1, double theta2);

    double theta1() const noexcept { return theta1_; }
    double theta2() const noexcept { return theta2_; }

private:
    double theta1_;
    double theta2_;
};

// Utility of a correct and of a wrong guess; the premium delta_u is positive.
class PayoffStructure {
public:
    PayoffStructure(double u_correct, double u_wrong);
    explicit PayoffStructure(double delta_u) : PayoffStructure(delta_u, 0.0) {}

    double u_correct() const noexcept { return u_correct_; }
    double u_wrong() const noexcept { return u_wrong_; }
    double delta_u() const noexcept { return u_correct_ - u_wrong_; }

private:
    double u_correct_;
    double u_wrong_;
};

enum class Provenance : std::uint8_t { Prior, AfterFirst, AfterBoth };

// A probability of state A together with the signal components it has
// absorbed.
class BeliefState {
public:
    static BeliefState prior(double p);
    static BeliefState after_first(double p, Component s1);
    static BeliefState after_both(double p, Component s1, Component s2);

    double prob_a() const noexcept { return prob_a_; }
    Provenance provenance() const noexcept { return provenance_; }
    std::optional<Component> first() const noexcept { return first_; }
    std::optional<Component> second() const noexcept { return second_; }

    // Bayesian update of this belief with the next unobserved component.
    BeliefState observe(const InformationStructure& info, Component s) const;

private:
    BeliefState(double p, Provenance prov, std::optional<Component> s1,
                std::optional<Component> s2);

    double prob_a_;
    Provenance provenance_;
    std::optional<Component> first_;
    std::optional<Component> second_;
};

// Model parameters shared by every decision-maker in a problem instance.
struct ModelParameters {
    InformationStructure info;
    PayoffStructure payoffs;
    double cost = 0.0;  // processing cost c of the second component

    ModelParameters(InformationStructure i, PayoffStructure u, double c);
};

// A full problem instance: parameters plus one or two priors.
class Scenario {
public:
    Scenario(ModelParameters params, std::vector<double> priors);

    const ModelParameters& params() const noexcept { return params_; }
    const InformationStructure& info() const noexcept { return params_.info; }
    const PayoffStructure& payoffs() const noexcept { return params_.payoffs; }
    double cost() const noexcept { return params_.cost; }
    const std::vector<double>& priors() const noexcept { return priors_; }

    // Ordered pair (p_i <= p_j); throws OrderingError if fewer than two priors.
    std::pair<double, double> ordered_pair() const;

private:
    ModelParameters params_;
    std::vector<double> priors_;
};

// Bayesian updating -----------------------------------------------------------

// One Bayes step with a binary component of precision theta.
double bayes_update(double p, double theta, Component s);

double posterior_after_first(double p, const InformationStructure& info, Component s1);
double posterior_after_both(double p, const InformationStructure& info, Component s1,
                            Component s2);

// P(sigma_1 = s1) under prior p.
double marginal_first(double p, const InformationStructure& info, Component s1);

// P(sigma_2 = s2 | sigma_1) given the interim posterior.
double conditional_second(double p_after_first, const InformationStructure& info,
                          Component s2);

// P(sigma_2 = s2) under prior p, ignoring sigma_1.
double marginal_second(double p, const InformationStructure& info, Component s2);

// P(sigma = (s1, s2)) under prior p.
double signal_probability(double p, const InformationStructure& info, const Signal& s);

// Random number generation ----------------------------------------------------

// Seedable 64-bit generator. split() derives an independent child stream
// from (seed, stream index) so parallel shards are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }
    Rng split(std::uint64_t stream) const;

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();
    bool bernoulli(double p) { return uniform() < p; }

    static std::uint64_t mix(std::uint64_t x) noexcept;  // splitmix64 finalizer

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct Draw {
    State state;
    Signal signal;
};

// Draws the state with P(A) = p, then both components independently given
// the state.
Draw sample_state_and_signal(double p, const InformationStructure& info, Rng& rng);
Draw sample_state_and_signal(double p, const InformationStructure& info,
                             std::uint64_t seed);

}  // namespace infoacq
