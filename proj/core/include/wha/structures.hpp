#pragma once

#include <optional>
#include <string>

#include "wha/diagram.hpp"
#include "wha/report.hpp"

namespace wha {

struct MonoidData {
    Space carrier;
    LinMap mu;   // A(x)A -> A
    LinMap eta;  // I -> A
};

struct ComonoidData {
    Space carrier;
    LinMap delta;    // A -> A(x)A
    LinMap epsilon;  // A -> I
};

struct FrobeniusData {
    Bicharacter chi;
    MonoidData monoid;
    ComonoidData comonoid;

    const Space& carrier() const { return monoid.carrier; }
    Field field() const { return chi.field(); }
    LinMap rho() const;    // delta eta: I -> A(x)A
    LinMap sigma() const;  // eps mu: A(x)A -> I
};

// Carrier with (mu, eta, delta, eps) and the derived s, t, r, which are
// computed from their defining diagrams on construction.
struct WeakBimonoidData {
    Bicharacter chi;
    Space carrier;
    LinMap mu, eta, delta, epsilon;
    LinMap s, t, r;

    static WeakBimonoidData make(Bicharacter chi, Space carrier, LinMap mu, LinMap eta, LinMap delta, LinMap epsilon);
    Field field() const { return chi.field(); }
    MonoidData monoid() const { return {carrier, mu, eta}; }
    ComonoidData comonoid() const { return {carrier, delta, epsilon}; }
};

struct WeakHopfData {
    WeakBimonoidData bimonoid;
    LinMap nu;
    std::optional<LinMap> nu_inv;
};

// Term environments: object A, generators mu, eta, delta, eps, and s, t, r,
// nu, nuinv where available.
Env make_env(const MonoidData& m, const Bicharacter& chi);
Env make_env(const ComonoidData& c, const Bicharacter& chi);
Env make_env(const FrobeniusData& fr);
Env make_env(const WeakBimonoidData& w);
Env make_env(const WeakHopfData& h);

Report check_monoid(const MonoidData& m, const Bicharacter& chi);
Report check_monoid(const MonoidData& m);
Report check_comonoid(const ComonoidData& c, const Bicharacter& chi);
Report check_comonoid(const ComonoidData& c);
Report check_weak_bimonoid(const WeakBimonoidData& w);

struct STR {
    LinMap s, t, r;
};
STR derive_stn(const WeakBimonoidData& w);

// properties of s and t, their interactions, and those of r
Report check_st_properties(const WeakBimonoidData& w);
// laws of an ordinary bialgebra; on a properly weak bimonoid some of these fail
Report check_strict_bialgebra_laws(const WeakBimonoidData& w);

// mu (f (x) g) delta
LinMap convolution(const LinMap& f, const LinMap& g, const WeakBimonoidData& w);

struct AntipodeSearch {
    std::optional<LinMap> nu;
    // when nu is empty: why, and where the obstruction shows up
    std::string reason;
    std::optional<Witness> witness;
    std::size_t solution_dim = 0;  // dimension of the affine space of solutions to the two linear axioms
};
// Solves nu * 1 = t and 1 * nu = r exactly over grade-preserving nu. If some
// antipode exists it equals nu0 * 1 * nu0 for any solution nu0, so that
// candidate is tested against all three axioms.
AntipodeSearch search_antipode(const WeakBimonoidData& w);
std::optional<LinMap> find_antipode(const WeakBimonoidData& w);

Report check_weak_hopf(const WeakHopfData& h);

Report check_frobenius(const FrobeniusData& fr);  // condition, lemma, pairing triangles
bool is_separable(const FrobeniusData& fr);
Report check_separable_frobenius(const FrobeniusData& fr);

// Monoid and comonoid morphism laws for f: R -> S.
Report check_frobenius_morphism(const LinMap& f, const FrobeniusData& R, const FrobeniusData& S);
// (1 (x) sigma_S)(1 (x) f (x) 1)(rho_R (x) 1): S -> R, checked against the
// mirrored formula and as a two-sided inverse. Throws NotFrobeniusMorphism.
LinMap frobenius_inverse(const LinMap& f, const FrobeniusData& R, const FrobeniusData& S);

}  // namespace wha
