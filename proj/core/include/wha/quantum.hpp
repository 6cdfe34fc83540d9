#pragma once

#include <optional>

#include "wha/report.hpp"
#include "wha/structures.hpp"

namespace wha {

// Quantum category A = (A, C, s, t, mu, eta). C = (C, e_C) is a comonoid in
// the idempotent completion; P = A (x)_C A is kept un-split as (A (x) A, m).
// In term environments: objects A, C; generators delta, eps, eC, dC, epsC,
// s, t, mu (P -> A), eta (C -> A), m, dl, dr.
struct QuantumCategoryData {
    Bicharacter chi;
    Space carrier;        // A
    Space object_space;   // carrier of C
    LinMap delta, epsilon;
    LinMap eC, deltaC, epsilonC;
    LinMap s, t;          // A -> C
    LinMap mu;            // A (x) A -> A, read on P
    LinMap eta;           // C -> A
    LinMap m;             // idempotent of P
    LinMap delta_l;       // P -> A (x) A (x) P
    LinMap delta_r;       // P -> P (x) A

    Field field() const { return chi.field(); }
};

// The weak bimonoid case: C = (A, t), mu = mu, eta = t, and m the tensor
// idempotent of the regular comodule with itself. Throws
// PreconditionSquareFailed when c (s x t) delta != (t x s) delta.
QuantumCategoryData quantum_category(const WeakBimonoidData& w);

// delta_l = (1 x 1 x m)(1 x c x 1)(delta x delta) m and
// delta_r = (m x 1)(1 x 1 x mu) delta_l, from the defining squares through
// the retraction m. Call after mutating fields to refresh them.
void derive_coactions(QuantumCategoryData& q);

Env make_env(const QuantumCategoryData& q);

// P: m idempotent, image(m) is the equalizer of (gamma_r x 1, 1 x gamma_l),
// the induced C-coactions restrict to P.
Report check_P(const QuantumCategoryData& q);
// delta_l: defining square, coassociative and counital left A (x) A-coaction;
// delta_r: defining square and the fork computed before B3.
Report check_coactions(const QuantumCategoryData& q);
// B1 to B6, each expanded into its component equations.
Report check_quantum_category(const QuantumCategoryData& q);

struct QuantumGroupoidData {
    QuantumCategoryData qc;
    LinMap upsilon, upsilon_inv;  // C -> C
    LinMap nu, nu_inv;            // A -> A
    LinMap theta, theta_inv;      // P -> P, on A (x) A

    // extra generators: upsilon, upsiloninv, nu, nuinv, theta, thetainv
    Env env() const;
};

// upsilon = t nu nu t, upsilon^-1 = t nu^-1 nu^-1 t, and
// theta = (1 x nu)(1 x mu)(c x 1)(1 x delta) m with the matching inverse.
// nu^-1 is computed when the weak Hopf data does not carry it; throws
// AntipodeNotInvertible when nu is singular.
QuantumGroupoidData quantum_groupoid(const WeakHopfData& h);

// P -> C (x) C (x) C by either route; both are returned so they can be compared.
std::pair<LinMap, LinMap> varsigma_routes(const QuantumCategoryData& q);

// G1, G2, G3 (corrected), the two routes of varsigma, the theta comodule
// square between P_l and P_r, and the comonoid isomorphisms upsilon and nu.
Report check_quantum_groupoid(const QuantumGroupoidData& g);

}  // namespace wha
