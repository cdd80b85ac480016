#pragma once
// Test-only reference computations in long double, written from the model
// primitives (prior, precisions, payoffs) without touching the library.

#include <algorithm>

namespace ref {

using real = long double;

// P(component = alpha | A) = theta, P(component = alpha | B) = 1 - theta.
inline real lik(real theta, bool state_a, bool alpha) {
    return (state_a == alpha) ? theta : 1.0L - theta;
}

// P(A | components), with either component possibly unobserved.
inline real posterior(real p, real t1, real t2, bool a1, int a2 /* -1 = unseen */) {
    real wa = p * lik(t1, true, a1);
    real wb = (1.0L - p) * lik(t1, false, a1);
    if (a2 >= 0) {
        wa *= lik(t2, true, a2 == 1);
        wb *= lik(t2, false, a2 == 1);
    }
    return wa / (wa + wb);
}

// P(sigma1 = a1, sigma2 = a2) under prior p.
inline real joint(real p, real t1, real t2, bool a1, bool a2) {
    return p * lik(t1, true, a1) * lik(t2, true, a2) +
           (1.0L - p) * lik(t1, false, a1) * lik(t2, false, a2);
}

// Value of the second component after a1, premium du: expected best payoff
// with both components minus best payoff with the first only.
inline real voi(real p, real t1, real t2, real du, bool a1) {
    const real first = p * lik(t1, true, a1) + (1.0L - p) * lik(t1, false, a1);
    real with = 0.0L;
    for (bool a2 : {true, false}) {
        const real wa = p * lik(t1, true, a1) * lik(t2, true, a2);
        const real wb = (1.0L - p) * lik(t1, false, a1) * lik(t2, false, a2);
        with += std::max(wa, wb);
    }
    const real pa = posterior(p, t1, t2, a1, -1);
    const real without = std::max(pa, 1.0L - pa);
    return std::max(real(0), du * (with / first - without));
}

}  // namespace ref
