#include "wha/registry.hpp"

namespace wha::registry {

const char* const kSource = "eta A ; delta A ; A mu ; A eps";
const char* const kTarget = "A eta ; A delta ; c(A, A) A ; A mu ; A eps";
const char* const kRotatedTarget = "eta A ; delta A ; A c(A, A) ; mu A ; eps A";

namespace {
const char* const kElided = "unit/counit circle written explicitly";
}

std::vector<IdentitySpec> monoid_axioms() {
    return {
        {"monoid.associativity", "monoid: multiplication is associative", {"mu A ; mu", "A mu ; mu"}, ""},
        {"monoid.unit.left", "monoid: left unit law", {"eta A ; mu", "A"}, ""},
        {"monoid.unit.right", "monoid: right unit law", {"A eta ; mu", "A"}, ""},
    };
}

std::vector<IdentitySpec> comonoid_axioms() {
    return {
        {"comonoid.coassociativity", "comonoid: comultiplication is coassociative", {"delta ; delta A", "delta ; A delta"}, ""},
        {"comonoid.counit.left", "comonoid: left counit law", {"delta ; eps A", "A"}, ""},
        {"comonoid.counit.right", "comonoid: right counit law", {"delta ; A eps", "A"}, ""},
    };
}

std::vector<IdentitySpec> frobenius_axioms() {
    return {
        {"frobenius.condition", "Frobenius condition (1 x mu)(delta x 1) = (mu x 1)(1 x delta)",
         {"delta A ; A mu", "A delta ; mu A"}, ""},
        {"frobenius.condition.left_middle", "Frobenius lemma: (1 x mu)(delta x 1) = delta mu",
         {"delta A ; A mu", "mu ; delta"}, ""},
        {"frobenius.condition.right_middle", "Frobenius lemma: (mu x 1)(1 x delta) = delta mu",
         {"A delta ; mu A", "mu ; delta"}, ""},
        {"frobenius.pairing.left", "rho = delta eta and sigma = eps mu: (sigma x 1)(1 x rho) = 1",
         {"A (eta ; delta) ; (mu ; eps) A", "A"}, ""},
        {"frobenius.pairing.right", "rho = delta eta and sigma = eps mu: (1 x sigma)(rho x 1) = 1",
         {"(eta ; delta) A ; A (mu ; eps)", "A"}, ""},
    };
}

std::vector<IdentitySpec> separability() {
    return {{"frobenius.separable", "separable: mu delta = 1", {"delta ; mu", "A"}, ""}};
}

std::vector<IdentitySpec> weak_bimonoid_axioms() {
    return {
        {"weak.mult_comult", "weak bimonoid: delta mu = (mu x mu)(1 x c x 1)(delta x delta)",
         {"mu ; delta", "delta delta ; A c(A, A) A ; mu mu"}, ""},
        {"weak.counit.plain", "weak bimonoid: eps(xyz) = eps(x y') eps(y'' z)",
         {"mu A ; mu ; eps", "A delta A ; mu mu ; eps eps"}, ""},
        {"weak.counit.crossed", "weak bimonoid: eps(xyz) through the inverse crossing of delta(y)",
         {"mu A ; mu ; eps", "A (delta ; ci(A, A)) A ; mu mu ; eps eps"}, ""},
        {"weak.unit.plain", "weak bimonoid: delta^2(1) = (delta(1) x 1)(1 x delta(1))",
         {"eta ; delta ; delta A", "(eta ; delta) (eta ; delta) ; A mu A"}, ""},
        {"weak.unit.crossed", "weak bimonoid: delta^2(1) through the inverse crossing of the middle legs",
         {"eta ; delta ; delta A", "(eta ; delta) (eta ; delta) ; A ci(A, A) A ; A mu A"}, ""},
    };
}

std::vector<IdentitySpec> source_properties() {
    return {
        {"source.comult.plain", "source map: delta s through the unit's comultiplication",
         {"s ; delta", "eta s ; delta A ; A mu"}, kElided},
        {"source.comult.crossed", "source map: delta s through the unit's comultiplication, crossed",
         {"s ; delta", "eta s ; delta A ; A ci(A, A) ; A mu"}, kElided},
        {"source.mult.plain", "source map: s mu through the counit",
         {"mu ; s", "delta A ; A mu ; s eps"}, kElided},
        {"source.mult.crossed", "source map: s mu through the counit, crossed",
         {"mu ; s", "delta A ; ci(A, A) A ; A mu ; s eps"}, kElided},
        {"source.unit_comult", "source map: (s x 1) delta eta = delta eta", {"eta ; delta ; s A", "eta ; delta"}, ""},
        {"source.unit", "source map: s eta = eta", {"eta ; s", "eta"}, ""},
        {"source.mult_counit", "source map: eps mu (1 x s) = eps mu", {"A s ; mu ; eps", "mu ; eps"}, ""},
        {"source.counit", "source map: eps s = eps", {"s ; eps", "eps"}, ""},
        {"source.comult_image", "source map: (s x 1) delta s = delta s", {"s ; delta ; s A", "s ; delta"}, ""},
        {"source.mult_image", "source map: s mu (1 x s) = s mu", {"A s ; mu ; s", "mu ; s"}, ""},
        {"source.mult_comult.in_right", "source map: delta mu (1 x s) = (1 x mu)(delta x s)",
         {"A s ; mu ; delta", "delta s ; A mu"}, ""},
        {"source.mult_comult.in_left", "source map: delta mu (s x 1) = (1 x mu)(c x 1)(s x delta)",
         {"s A ; mu ; delta", "s delta ; c(A, A) A ; A mu"}, ""},
        {"source.mult_comult.out_right", "source map: (1 x s) delta mu = (mu x s)(1 x c)(delta x 1)",
         {"mu ; delta ; A s", "delta A ; A c(A, A) ; mu s"}, ""},
        {"source.mult_comult.out_left", "source map: (s x 1) delta mu = (s x 1)(1 x mu)(delta x 1)",
         {"mu ; delta ; s A", "delta A ; A mu ; s A"}, ""},
        {"source.image_submonoid", "source map: s mu (s x s) = mu (s x s)", {"s s ; mu ; s", "s s ; mu"}, ""},
        {"source.image_subcomonoid", "source map: (s x s) delta s = (s x s) delta", {"s ; delta ; s s", "delta ; s s"}, ""},
        {"source.separability", "source map: mu (s x 1) ci delta = 1", {"delta ; ci(A, A) ; s A ; mu", "A"}, ""},
        {"source.idempotent", "source map is idempotent", {"s ; s", "s"}, ""},
    };
}

std::vector<IdentitySpec> target_properties() {
    return {
        {"target.comult.plain", "target map: delta t through the unit's comultiplication",
         {"t ; delta", "eta t ; delta A ; A mu"}, kElided},
        {"target.comult.crossed", "target map: delta t through the unit's comultiplication, crossed",
         {"t ; delta", "eta t ; delta A ; A ci(A, A) ; A mu"}, kElided},
        {"target.mult.plain", "target map: t mu through the counit",
         {"mu ; t", "A delta ; mu t ; eps A"}, kElided},
        {"target.mult.crossed", "target map: t mu through the counit, crossed",
         {"mu ; t", "A delta ; A ci(A, A) ; mu t ; eps A"}, kElided},
        {"target.unit_comult", "target map: (t x 1) delta eta = delta eta", {"eta ; delta ; t A", "eta ; delta"}, ""},
        {"target.unit", "target map: t eta = eta", {"eta ; t", "eta"}, ""},
        {"target.mult_counit", "target map: eps mu (t x 1) = eps mu", {"t A ; mu ; eps", "mu ; eps"}, ""},
        {"target.counit", "target map: eps t = eps", {"t ; eps", "eps"}, ""},
        {"target.comult_image", "target map: (t x 1) delta t = delta t", {"t ; delta ; t A", "t ; delta"}, ""},
        {"target.mult_image", "target map: t mu (t x 1) = t mu", {"t A ; mu ; t", "mu ; t"}, ""},
        {"target.mult_comult.in_right", "target map: delta mu (1 x t) = (1 x mu)(delta x t)",
         {"A t ; mu ; delta", "delta t ; A mu"}, ""},
        {"target.mult_comult.in_left", "target map: delta mu (t x 1) = (1 x mu)(c x 1)(t x delta)",
         {"t A ; mu ; delta", "t delta ; c(A, A) A ; A mu"}, ""},
        {"target.mult_comult.out_right", "target map: (1 x t) delta mu = (mu x t)(1 x delta)",
         {"mu ; delta ; A t", "A delta ; mu t"}, ""},
        {"target.mult_comult.out_left", "target map: (t x 1) delta mu = (t x mu)(c x 1)(1 x delta)",
         {"mu ; delta ; t A", "A delta ; c(A, A) A ; t mu"}, ""},
        {"target.image_submonoid", "target map: t mu (t x t) = mu (t x t)", {"t t ; mu ; t", "t t ; mu"}, ""},
        {"target.image_subcomonoid", "target map: (t x t) delta t = (t x t) delta", {"t ; delta ; t t", "delta ; t t"}, ""},
        {"target.separability", "target map: mu (1 x t) delta = 1", {"delta ; A t ; mu", "A"}, ""},
        {"target.idempotent", "target map is idempotent", {"t ; t", "t"}, ""},
    };
}

std::vector<IdentitySpec> source_target_interactions() {
    return {
        {"interact.ts_is_s", "globular identity: t s = s", {"s ; t", "s"}, ""},
        {"interact.st_is_t", "globular identity: s t = t", {"t ; s", "t"}, ""},
        {"interact.comult_of_t", "(s x 1) delta t = delta t", {"t ; delta ; s A", "t ; delta"}, ""},
        {"interact.comult_of_s", "(t x 1) delta s = delta s", {"s ; delta ; t A", "s ; delta"}, ""},
        {"interact.commuting_square", "(t x s) delta = c (s x t) delta", {"delta ; t s", "delta ; s t ; c(A, A)"}, ""},
        {"interact.mult_comult", "(t x 1)(1 x mu)(delta x 1) = (s x mu)(c x 1)(1 x delta)",
         {"delta A ; A mu ; t A", "A delta ; c(A, A) A ; s mu"}, ""},
    };
}

std::vector<IdentitySpec> rotated_target_properties() {
    return {
        {"rotated.s_after_r", "s r = s", {"r ; s", "s"}, ""},
        {"rotated.r_after_s", "r s = r", {"s ; r", "r"}, ""},
        {"rotated.comult_square", "(t x r) delta = c (r x t) delta", {"delta ; t r", "delta ; r t ; c(A, A)"}, ""},
        {"rotated.mult_square", "mu (t x r) = mu (r x t) c", {"t r ; mu", "c(A, A) ; r t ; mu"}, ""},
        {"rotated.source_of_mult", "s mu (1 x r) = s mu", {"A r ; mu ; s", "mu ; s"}, ""},
        {"rotated.r_of_mult", "r mu (1 x s) = r mu", {"A s ; mu ; r", "mu ; r"}, ""},
        {"rotated.idempotent", "r is idempotent", {"r ; r", "r"}, ""},
    };
}

std::vector<IdentitySpec> antipode_axioms() {
    return {
        {"antipode.left", "antipode: mu (nu x 1) delta = t", {"delta ; nu A ; mu", "t"}, ""},
        {"antipode.right", "antipode: mu (1 x nu) delta = r", {"delta ; A nu ; mu", "r"}, ""},
        {"antipode.triple", "antipode: nu * 1 * nu = nu",
         {"delta ; A delta ; nu A nu ; mu A ; mu", "nu"}, ""},
    };
}

std::vector<IdentitySpec> antipode_consequences() {
    return {
        {"antipode.t_conv_nu", "antipode: mu (t x nu) delta = nu", {"delta ; t nu ; mu", "nu"}, ""},
        {"antipode.nu_conv_r", "antipode: mu (nu x r) delta = nu", {"delta ; nu r ; mu", "nu"}, ""},
        {"antipode.source", "antipode: nu s = r", {"s ; nu", "r"}, ""},
        {"antipode.t_chain", "antipode: t nu = nu r = t r", {"nu ; t", "r ; nu", "r ; t"}, ""},
        {"antipode.r_chain", "antipode: r nu = nu t = r t", {"nu ; r", "t ; nu", "t ; r"}, ""},
        {"antipode.counit", "antipode: eps nu = eps", {"nu ; eps", "eps"}, ""},
        {"antipode.unit", "antipode: nu eta = eta", {"eta ; nu", "eta"}, ""},
        {"antipode.anti_comonoid", "antipode: delta nu = c (nu x nu) delta",
         {"nu ; delta", "delta ; nu nu ; c(A, A)"}, ""},
        {"antipode.anti_monoid", "antipode: nu mu = mu (nu x nu) c", {"mu ; nu", "c(A, A) ; nu nu ; mu"}, ""},
    };
}

std::vector<IdentitySpec> strict_bialgebra_laws() {
    return {
        {"strict.counit_mult", "bialgebra law eps mu = eps x eps", {"mu ; eps", "eps eps"}, ""},
        {"strict.comult_unit", "bialgebra law delta eta = eta x eta", {"eta ; delta", "eta eta"}, ""},
        {"strict.counit_unit", "bialgebra law eps eta = 1", {"eta ; eps", "I"}, ""},
        {"strict.mult_comult", "bialgebra law delta mu = (mu x mu)(1 x c x 1)(delta x delta)",
         {"mu ; delta", "delta delta ; A c(A, A) A ; mu mu"}, ""},
    };
}

std::vector<IdentitySpec> object_of_objects_axioms() {
    // delta_C = (t x t) delta, eps_C = eps, mu_C = mu (t x t), eta_C = eta
    const char* dC = "(delta ; t t)";
    const char* mC = "(t t ; mu)";
    auto cat = [](std::initializer_list<std::string> parts) {
        std::string s;
        for (const auto& p : parts) s += p;
        return s;
    };
    return {
        {"objects.delta_is_morphism", "C: delta_C satisfies (t x t) delta_C t = delta_C",
         {cat({"t ; ", dC, " ; t t"}), dC}, ""},
        {"objects.mu_is_morphism", "C: mu_C satisfies t mu_C (t x t) = mu_C", {cat({"t t ; ", mC, " ; t"}), mC}, ""},
        {"objects.eps_is_morphism", "C: eps t = eps", {"t ; eps", "eps"}, ""},
        {"objects.eta_is_morphism", "C: t eta = eta", {"eta ; t", "eta"}, ""},
        {"objects.coassociativity", "C: delta_C is coassociative",
         {cat({dC, " ; ", dC, " t"}), cat({dC, " ; t ", dC})}, ""},
        {"objects.counit.left", "C: (eps x 1) delta_C = t", {cat({dC, " ; eps t"}), "t"}, ""},
        {"objects.counit.right", "C: (1 x eps) delta_C = t", {cat({dC, " ; t eps"}), "t"}, ""},
        {"objects.associativity", "C: mu_C is associative", {cat({mC, " t ; ", mC}), cat({"t ", mC, " ; ", mC})}, ""},
        {"objects.unit.left", "C: mu_C (eta x 1) = t", {cat({"eta t ; ", mC}), "t"}, ""},
        {"objects.unit.right", "C: mu_C (1 x eta) = t", {cat({"t eta ; ", mC}), "t"}, ""},
        {"objects.frobenius.left", "C: (1 x mu_C)(delta_C x 1) = delta_C mu_C",
         {cat({dC, " t ; t ", mC}), cat({mC, " ; ", dC})}, ""},
        {"objects.frobenius.right", "C: (mu_C x 1)(1 x delta_C) = delta_C mu_C",
         {cat({"t ", dC, " ; ", mC, " t"}), cat({mC, " ; ", dC})}, ""},
        {"objects.separable", "C: mu_C delta_C = t", {cat({dC, " ; ", mC}), "t"}, ""},
    };
}

std::vector<IdentitySpec> double_splitting() {
    return {
        {"splitting.through_t", "t splits as t . t through (A, t)", {"t ; t", "t"}, ""},
        {"splitting.through_s", "t splits as s . t through (A, s)", {"t ; s", "t"}, ""},
        {"splitting.retract_through_s", "t s = s is the identity of (A, s)", {"s ; t", "s"}, ""},
        {"splitting.s_is_morphism", "s: (A, s) -> (A, t) satisfies t s s = s", {"s ; s ; t", "s"}, ""},
        {"splitting.t_is_morphism", "t: (A, t) -> (A, s) satisfies s t t = t", {"t ; t ; s", "t"}, ""},
        {"splitting.inverse.on_t", "s . t = identity of (A, t)", {"t ; s", "t"}, ""},
        {"splitting.inverse.on_s", "t . s = identity of (A, s)", {"s ; t", "s"}, ""},
    };
}

std::vector<IdentitySpec> st_comonoid_morphisms() {
    return {
        {"comonoid_morphism.s", "s: A -> C opposite is a comonoid morphism: c (t x t) delta s = (s x s) delta",
         {"s ; delta ; t t ; c(A, A)", "delta ; s s"}, ""},
        {"comonoid_morphism.s_counit", "s preserves the counit", {"s ; eps", "eps"}, ""},
        {"comonoid_morphism.t", "t: A -> C is a comonoid morphism: (t x t) delta t = (t x t) delta",
         {"t ; delta ; t t", "delta ; t t"}, ""},
        {"comonoid_morphism.t_counit", "t preserves the counit", {"t ; eps", "eps"}, ""},
    };
}

}  // namespace wha::registry
