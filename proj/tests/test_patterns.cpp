#include <doctest.h>

#include <cmath>

#include "infoacq/patterns.hpp"

using namespace infoacq;
using doctest::Approx;

namespace {
const InformationStructure kIntro(0.6, 0.8);
const PayoffStructure kUnit(1.0);
constexpr auto A = Component::Alpha;
constexpr auto B = Component::Beta;
const Signal kAA{A, A}, kAB{A, B}, kBA{B, A}, kBB{B, B};

ModelParameters intro(double c = 0.1) { return {kIntro, kUnit, c}; }
}  // namespace

TEST_CASE("realized posteriors") {
    const auto h = realized_posterior(0.7, intro(), kAB);
    CHECK(h.belief == Approx(0.7778).epsilon(1e-4));
    CHECK(h.action == Acquisition::Skip);
    const auto l = realized_posterior(0.3, intro(), kAB);
    CHECK(l.belief == Approx(0.138462).epsilon(1e-5));
    CHECK(l.action == Acquisition::Acquire);
    for (const auto& s : all_signals()) {
        CHECK(realized_posterior(0.5, intro(0.0), s).belief ==
              posterior_after_both(0.5, kIntro, s.first, s.second));
    }
}

TEST_CASE("pairwise outcome of the introductory pair") {
    const auto o = pairwise_outcome(0.3, 0.7, intro(), kAB);
    CHECK(o.divergence == Approx(0.4 - (0.777778 - 0.138462)).epsilon(1e-5));
    CHECK(o.divergence < 0.0);
    CHECK(o.inversion < 0.0);
    CHECK(o.polarized);
    CHECK(o.acquisition.first == Acquisition::Acquire);
    CHECK(o.acquisition.second == Acquisition::Skip);

    const auto same = pairwise_outcome(0.3, 0.7, intro(), kAA);
    CHECK(same.inversion > 0.0);
    CHECK_FALSE(same.polarized);

    for (const auto& s : all_signals()) {
        const auto d = pairwise_outcome(0.45, 0.45, intro(), s);
        CHECK(d.divergence == 0.0);
        CHECK(d.inversion >= 0.0);
        CHECK_FALSE(d.polarized);
    }
    CHECK_THROWS_AS(pairwise_outcome(0.7, 0.3, intro(), kAB), OrderingError);
}

TEST_CASE("property: polarized is exactly D < 0 and I < 0") {
    Rng rng(123);
    for (int k = 0; k < 100000; ++k) {
        double a = rng.uniform(), b = rng.uniform();
        if (a > b) std::swap(a, b);
        const InformationStructure info(0.501 + 0.498 * rng.uniform(), 0.501 + 0.498 * rng.uniform());
        const ModelParameters m(info, PayoffStructure(0.5 + rng.uniform()), 0.3 * rng.uniform());
        const auto& s = all_signals()[k % 4];
        const auto o = pairwise_outcome(a, b, m, s);
        REQUIRE(o.polarized == (o.divergence < 0.0 && o.inversion < 0.0));
    }
}

TEST_CASE("polarization feasibility") {
    const auto f = pb_feasible(0.3, 0.7, kIntro, kUnit, 0.1);
    CHECK(f.feasible);
    CHECK(f.via_alpha);
    CHECK(f.via_beta);
    CHECK(f.theta_condition);
    const InformationStructure rev(0.8, 0.6);
    for (double c : {0.01, 0.05, 0.1}) CHECK_FALSE(pb_feasible(0.3, 0.7, rev, kUnit, c).feasible);
    CHECK_FALSE(pb_feasible(0.3, 0.7, rev, kUnit, std::nullopt).feasible);
    // Both priors extreme: nobody ever acquires.
    CHECK_FALSE(pb_feasible(0.9, 0.95, kIntro, kUnit, 0.05).feasible);
    CHECK_FALSE(pb_feasible(0.9, 0.95, kIntro, kUnit, std::nullopt).feasible);
    // Degenerate priors never move.
    CHECK_FALSE(pb_feasible(0.0, 0.4, kIntro, kUnit, 0.1).feasible);
    CHECK(pb_feasible(0.3, 0.7, kIntro, kUnit, std::nullopt).feasible);
    CHECK_THROWS_AS(pb_feasible(0.7, 0.3, kIntro, kUnit, 0.1), OrderingError);
    CHECK_THROWS_AS(pb_feasible(0.3, 0.3, kIntro, kUnit, 0.1), OrderingError);
}

TEST_CASE("polarization through a belief swap") {
    // Only the upper prior acquires after alpha, yet under (alpha,beta) the
    // two beliefs cross and end further apart than they started.
    const ModelParameters m(kIntro, kUnit, 0.05);
    const auto o = pairwise_outcome(0.12, 0.19, m, kAB);
    CHECK(o.acquisition.first == Acquisition::Skip);
    CHECK(o.acquisition.second == Acquisition::Acquire);
    CHECK(o.realized_posteriors.first > o.realized_posteriors.second);
    CHECK(o.polarized);
    CHECK_FALSE(pb_feasible(0.12, 0.19, kIntro, kUnit, 0.05).feasible);
}

TEST_CASE("polarization probability") {
    CHECK(pb_probability(0.5, 0.3, 0.7, kIntro, kUnit, 0.1) == Approx(0.5).epsilon(1e-12));
    CHECK(pb_probability_joint(0.5, 0.3, 0.7, kIntro, kUnit, 0.1) == Approx(0.44).epsilon(1e-12));
    const InformationStructure rev(0.8, 0.6);
    CHECK(pb_probability(0.5, 0.3, 0.7, rev, kUnit, 0.1) == 0.0);
    // Both forms agree when the subjective prior is degenerate.
    CHECK(pb_probability(1.0, 0.3, 0.7, kIntro, kUnit, 0.1) ==
          Approx(pb_probability_joint(1.0, 0.3, 0.7, kIntro, kUnit, 0.1)).epsilon(1e-14));
    // The closed form with both indicators on.
    for (double p : {0.1, 0.3, 0.6, 0.9}) {
        const double t1 = 0.6, t2 = 0.8;
        const double expect = (t1 + t2 - 2 * t1 * t2) * (1 - 4 * p * (1 - p)) + 2 * p * (1 - p);
        CHECK(pb_probability(p, 0.3, 0.7, kIntro, kUnit, 0.1) == Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS(pb_probability(0.5, 0.7, 0.3, kIntro, kUnit, 0.1), OrderingError);
}

TEST_CASE("property: probability bound") {
    Rng rng(8);
    for (int k = 0; k < 20000; ++k) {
        double a = rng.uniform(), b = rng.uniform();
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const InformationStructure info(0.501 + 0.498 * rng.uniform(), 0.501 + 0.498 * rng.uniform());
        const PayoffStructure u(0.5 + rng.uniform());
        const double c = rng.uniform() * max_willingness_to_pay(info, u);
        const double ps = rng.uniform();
        REQUIRE(pb_probability(ps, a, b, info, u, c) <= 0.5 + 1e-12);
        REQUIRE(pb_probability_joint(ps, a, b, info, u, c) <= 0.5 + 1e-12);
    }
}

TEST_CASE("polarization partners") {
    const auto t = polarization_partners(0.3, 0.1, kIntro, kUnit);
    CHECK(t.contains(0.7));
    CHECK(t.contains(0.61));
    CHECK(t.contains(0.5));  // via beta: 0.5 acquires after beta, 0.3 does not
    CHECK_FALSE(t.contains(0.35));
    CHECK_FALSE(pb_feasible(0.3, 0.35, kIntro, kUnit, 0.1).feasible);
    CHECK(pb_feasible(0.3, 0.7, kIntro, kUnit, 0.1).feasible);

    const auto hi = polarization_partners(0.9, 0.1, kIntro, kUnit);
    const auto ha = h_set(0.1, kIntro, kUnit, A);
    CHECK(hi.contains(0.3));
    CHECK(hi.contains(ha.lower() + 1e-9));
    CHECK_FALSE(hi.contains(ha.lower() - 1e-9));

    const auto lo = polarization_partners(0.1, 0.1, kIntro, kUnit);
    const auto hb = h_set(0.1, kIntro, kUnit, B);
    CHECK(lo.contains(0.5));
    CHECK(lo.contains(hb.upper() - 1e-9));

    CHECK_THROWS_AS(polarization_partners(0.3, max_willingness_to_pay(kIntro, kUnit), kIntro, kUnit), DomainError);
    CHECK_THROWS_AS(polarization_partners(0.3, 0.0, kIntro, kUnit), DomainError);
    CHECK_THROWS_AS(polarization_partners(0.3, 0.1, InformationStructure(0.8, 0.6), kUnit),
                    DomainError);
    CHECK_THROWS_AS(polarization_partners(0.0, 0.1, kIntro, kUnit), DomainError);
}

TEST_CASE("property: partner sets are non-empty and agree with feasibility") {
    Rng rng(31);
    for (int k = 0; k < 3000; ++k) {
        const double t1 = 0.51 + 0.38 * rng.uniform();
        const double t2 = t1 + (0.99 - t1) * (0.05 + 0.95 * rng.uniform());
        const InformationStructure info(t1, t2);
        const double c = (0.01 + 0.98 * rng.uniform()) * max_willingness_to_pay(info, kUnit);
        const double p_i = 0.001 + 0.998 * rng.uniform();
        const auto t = polarization_partners(p_i, c, info, kUnit);
        REQUIRE_FALSE(t.is_empty());
        const double q = 0.001 + 0.998 * rng.uniform();
        if (q == p_i) continue;
        const auto w_i = wtp_pair(p_i, info, kUnit);
        const auto w_q = wtp_pair(q, info, kUnit);
        if (std::abs(w_i.alpha - c) < 1e-9 || std::abs(w_i.beta - c) < 1e-9 ||
            std::abs(w_q.alpha - c) < 1e-9 || std::abs(w_q.beta - c) < 1e-9) {
            continue;
        }
        const double lo = std::min(p_i, q), hi = std::max(p_i, q);
        REQUIRE(t.contains(q) == pb_feasible(lo, hi, info, kUnit, c).feasible);
    }
}

TEST_CASE("disconfirmation") {
    const auto d = disconfirmation_report(0.7, kIntro, kUnit, 0.1);
    CHECK(d.tendency);
    CHECK(d.exhibits);
    CHECK(d.wtp_beta == Approx(0.191304).epsilon(1e-5));
    CHECK(d.wtp_alpha == Approx(0.022222).epsilon(1e-5));
    CHECK_FALSE(disconfirmation_report(0.5, kIntro, kUnit, 0.1).tendency);
    const auto ex = disconfirmation_report(0.95, kIntro, kUnit, 0.1);
    CHECK_FALSE(ex.tendency);
    CHECK_FALSE(ex.exhibits);
    const auto low = disconfirmation_report(0.3, kIntro, kUnit, 0.1);
    CHECK(low.tendency);
    CHECK(low.exhibits);
    const auto chr = disconfirmation_characterized(0.7, kIntro, kUnit, 0.1);
    CHECK(chr.tendency);
    CHECK(chr.exhibits);
}

TEST_CASE("confirmatory and disproving patterns") {
    const auto cb = cb_db_report(0.7, intro(), kAB);
    CHECK(cb.confirmatory);
    CHECK_FALSE(cb.disproving);
    CHECK_FALSE(cb_db_report(0.7, intro(), kBA).disproving);
    CHECK(cb_db_report(0.7, intro(0.25), kBA).disproving);
    CHECK_THROWS_AS(cb_db_report(0.5, intro(), kAB), DomainError);
    CHECK_THROWS_AS(cb_db_characterized(0.5, intro(), kAB), DomainError);

    const auto chr = cb_db_characterized(0.7, intro(), kAB);
    CHECK(chr.confirmatory);
    CHECK(cb_db_characterized(0.7, intro(0.25), kBA).disproving);
}

TEST_CASE("reactions") {
    const auto r = reaction_report(0.7, intro(), kAA);
    CHECK(r.underreaction);
    CHECK_FALSE(r.overreaction);
    // A more precise second component rules out overreaction.
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double c : {0.0, 0.05, 0.1, 0.25}) {
            CHECK_FALSE(reaction_report(p, intro(c), kAB).overreaction);
            CHECK_FALSE(reaction_report(p, intro(c), kBA).overreaction);
        }
    }
    const InformationStructure rev(0.8, 0.6);
    const double w = willingness_to_pay(0.7, rev, kUnit, A);
    const ModelParameters m(rev, kUnit, w + 0.01);
    const auto o = reaction_report(0.7, m, kAB);
    CHECK(o.overreaction);
    const double full = posterior_after_both(0.7, rev, A, B);
    CHECK(0.7 < full);
    CHECK(full < posterior_after_first(0.7, rev, A));
    CHECK(reaction_characterized(0.7, m, kAB).overreaction);
}

TEST_CASE("property: pattern reports are internally consistent") {
    Rng rng(4);
    for (int k = 0; k < 50000; ++k) {
        const double p = rng.uniform();
        const InformationStructure info(0.501 + 0.498 * rng.uniform(), 0.501 + 0.498 * rng.uniform());
        const ModelParameters m(info, PayoffStructure(0.5 + rng.uniform()), 0.3 * rng.uniform());
        const auto& s = all_signals()[k % 4];
        const auto rep = pattern_report(p, m, s);
        REQUIRE_FALSE((rep.confirmatory && rep.disproving));
        REQUIRE_FALSE((rep.underreaction && rep.overreaction));
        REQUIRE(rep.realized == (rep.action == Acquisition::Acquire ? rep.full_posterior
                                                                    : rep.interim_posterior));
    }
}

TEST_CASE("pattern report at one half omits favored-state patterns") {
    const auto rep = pattern_report(0.5, intro(), kAB);
    CHECK_FALSE(rep.confirmatory);
    CHECK_FALSE(rep.disproving);
    CHECK_FALSE(rep.disconfirmation_tendency);
}
