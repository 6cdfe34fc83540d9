#include "wha/quantum.hpp"

#include <chrono>

#include "wha/comodules.hpp"
#include "wha/errors.hpp"
#include "wha/linalg.hpp"

namespace wha {

namespace {

using Clock = std::chrono::steady_clock;

const char* const kGammaL = "delta ; ci(A, A) ; s A";  // A -> C (x) A
const char* const kGammaR = "delta ; A t";             // A -> A (x) C

Item eq(const Env& env, const std::string& id, const std::string& cit, std::vector<std::string> sides) {
    return check_identity({id, cit, std::move(sides), ""}, env);
}

Report finish(Report r, Clock::time_point t0) {
    r.sort();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

Env with_coactions(const QuantumCategoryData& q) {
    Env env = make_env(q);
    env.add_generator("gl", evaluate(kGammaL, env));
    env.add_generator("gr", evaluate(kGammaR, env));
    return env;
}

Item containment(const std::string& id, const std::string& cit, const LinMap& big, const LinMap& small) {
    Item it{id, cit, Verdict::pass, std::nullopt, {}};
    if (!column_span_contains(big, small)) {
        it.verdict = Verdict::fail;
        it.witness = Witness{"span", "-", "not contained", "contained"};
    }
    return it;
}

}  // namespace

Env make_env(const QuantumCategoryData& q) {
    Env env(q.chi);
    env.add_object("A", q.carrier);
    env.add_object("C", q.object_space);
    env.add_generator("delta", q.delta);
    env.add_generator("eps", q.epsilon);
    env.add_generator("eC", q.eC);
    env.add_generator("dC", q.deltaC);
    env.add_generator("epsC", q.epsilonC);
    env.add_generator("s", q.s);
    env.add_generator("t", q.t);
    env.add_generator("mu", q.mu);
    env.add_generator("eta", q.eta);
    env.add_generator("m", q.m);
    env.add_generator("dl", q.delta_l);
    env.add_generator("dr", q.delta_r);
    return env;
}

void derive_coactions(QuantumCategoryData& q) {
    // placeholders so the environment resolves every name
    q.delta_l = q.delta_r = q.m;
    Env env = make_env(q);
    q.delta_l = evaluate("m ; delta delta ; A c(A, A) A ; A A m", env);
    env.add_generator("dl", q.delta_l);
    q.delta_r = evaluate("dl ; A A mu ; m A", env);
}

QuantumCategoryData quantum_category(const WeakBimonoidData& w) {
    Env env = make_env(w);
    if (auto d = compare_terms(parse_term("delta ; s t ; c(A, A)", env), parse_term("delta ; t s", env), env))
        throw PreconditionSquareFailed("c (s x t) delta != (t x s) delta");
    const ComoduleData A = regular_comodule(w);
    QuantumCategoryData q{w.chi,
                          w.carrier,
                          w.carrier,
                          w.delta,
                          w.epsilon,
                          w.t,
                          evaluate("t ; delta ; t t", env),
                          evaluate("t ; eps", env),
                          w.s,
                          w.t,
                          w.mu,
                          w.t,
                          tensor_over_C(A, A, w).e,
                          w.t,
                          w.t};
    derive_coactions(q);
    return q;
}

Report check_P(const QuantumCategoryData& q) {
    const auto t0 = Clock::now();
    Env env = with_coactions(q);
    Report r{"quantum-P", {}, 0};
    r.items.push_back(eq(env, "P.precondition", "c (s x t) delta = (t x s) delta", {"delta ; s t ; c(C, C)", "delta ; t s"}));
    r.items.push_back(eq(env, "P.idempotent", "m is idempotent", {"m ; m", "m"}));
    r.items.push_back(eq(env, "P.left_coaction", "(gamma_l x 1) restricts to C (x) P", {"m ; gl A ; C m", "m ; gl A"}));
    r.items.push_back(eq(env, "P.right_coaction", "(1 x gamma_r) restricts to P (x) C", {"m ; A gr ; m C", "m ; A gr"}));

    const LinMap f = evaluate("gr A", env), g = evaluate("A gl", env);
    const Equalizer e = equalizer(f, g);
    const std::uint32_t dm = rank(q.m), de = e.object.dim();
    Item dim{"P.equalizer.dimension", "rank m = dimension of the equalizer of (gamma_r x 1, 1 x gamma_l)",
             Verdict::pass, std::nullopt, "dim P = " + std::to_string(dm)};
    if (dm != de) {
        dim.verdict = Verdict::fail;
        dim.witness = Witness{"rank m", "dim equalizer", std::to_string(dm), std::to_string(de)};
    }
    r.items.push_back(dim);
    r.items.push_back(containment("P.equalizer.contains_image", "image of m lies in the equalizer", e.incl, q.m));
    r.items.push_back(containment("P.equalizer.inside_image", "the equalizer lies in the image of m", q.m, e.incl));
    return finish(std::move(r), t0);
}

Report check_coactions(const QuantumCategoryData& q) {
    const auto t0 = Clock::now();
    Env env = with_coactions(q);
    Report r{"quantum-coactions", {}, 0};
    r.items.push_back(eq(env, "delta_l.defining", "(1 x 1 x iota) delta_l = (1 x c x 1)(delta x delta) iota",
                         {"dl", "m ; delta delta ; A c(A, A) A"}));
    r.items.push_back(eq(env, "delta_l.coassociativity", "delta_l is a coassociative left A (x) A-coaction",
                         {"dl ; delta delta A A ; A c(A, A) A A A", "dl ; A A dl"}));
    r.items.push_back(eq(env, "delta_l.counit", "delta_l is counital", {"dl ; eps eps A A", "m"}));
    r.items.push_back(eq(env, "delta_r.fork", "(1 x 1 x mu) delta_l equalizes gamma_r x 1 x 1 and 1 x gamma_l x 1",
                         {"dl ; A A mu ; gr A A", "dl ; A A mu ; A gl A"}));
    r.items.push_back(eq(env, "delta_r.defining", "(iota x 1) delta_r = (1 x 1 x mu) delta_l", {"dr", "dl ; A A mu"}));
    return finish(std::move(r), t0);
}

Report check_quantum_category(const QuantumCategoryData& q) {
    const auto t0 = Clock::now();
    Env env = with_coactions(q);
    Report r{"quantum-category", {}, 0};
    auto add = [&](const std::string& id, const std::string& cit, std::vector<std::string> sides) {
        r.items.push_back(eq(env, id, cit, std::move(sides)));
    };

    add("B1.mu.completion", "mu is a morphism out of P", {"m ; mu", "mu"});
    add("B1.eta.completion", "eta is a morphism out of C", {"eC ; eta", "eta"});
    add("B1.unit.right", "mu (1 x eta) gamma_r = 1", {"gr ; A eta ; mu", "A"});
    add("B1.unit.left", "mu (eta x 1) gamma_l = 1", {"gl ; eta A ; mu", "A"});
    add("B1.mu.right_comodule", "mu is a right C-comodule morphism", {"m ; mu ; gr", "m ; A gr ; mu C"});
    add("B1.mu.left_comodule", "mu is a left C-comodule morphism", {"m ; mu ; gl", "m ; gl A ; C mu"});
    add("B1.eta.right_comodule", "eta is a right C-comodule morphism", {"eC ; eta ; gr", "dC ; eta C"});
    add("B1.eta.left_comodule", "eta is a left C-comodule morphism", {"eC ; eta ; gl", "dC ; C eta"});

    // associativity on A (x)_C A (x)_C A, the joint equalizer of both forks
    {
        const Equalizer e1 = equalizer(evaluate("gr A A", env), evaluate("A gl A", env));
        const Equalizer e2 = equalizer(compose(evaluate("A gr A", env), e1.incl),
                                       compose(evaluate("A A gl", env), e1.incl));
        const LinMap j = compose(e1.incl, e2.incl);
        r.items.push_back(compare_maps("B1.associativity", "mu (mu x 1) = mu (1 x mu) on A (x)_C A (x)_C A",
                                       compose(evaluate("mu A ; mu", env), j), compose(evaluate("A mu ; mu", env), j)));
    }

    add("B2", "(1 x mu)(t x eps x 1) delta_l = (1 x mu)(eps x s x 1) delta_l",
        {"dl ; t eps A A ; C mu", "dl ; eps s A A ; C mu"});
    add("B3", "delta mu = (mu x 1) delta_r", {"m ; mu ; delta", "dr ; mu A"});
    add("B4", "eps mu = (eps x eps) iota", {"m ; mu ; eps", "m ; eps eps"});
    add("B5", "eps eta = eps on C", {"eC ; eta ; eps", "epsC"});
    add("B6", "delta eta = (eta x 1)(s x 1) delta eta = (eta x 1)(t x 1) delta eta",
        {"eC ; eta ; delta", "eC ; eta ; delta ; s A ; eta A", "eC ; eta ; delta ; t A ; eta A"});
    add("B6.comodule.coassociativity", "C is a right A-comodule via (s x 1) delta eta",
        {"eC ; eta ; delta ; s A ; C delta", "eC ; eta ; delta ; s A ; eta A ; delta A ; s A A"});
    add("B6.comodule.counit", "the coaction (s x 1) delta eta on C is counital", {"eC ; eta ; delta ; s A ; C eps", "eC"});
    return finish(std::move(r), t0);
}

Env QuantumGroupoidData::env() const {
    Env e = with_coactions(qc);
    e.add_generator("upsilon", upsilon);
    e.add_generator("upsiloninv", upsilon_inv);
    e.add_generator("nu", nu);
    e.add_generator("nuinv", nu_inv);
    e.add_generator("theta", theta);
    e.add_generator("thetainv", theta_inv);
    return e;
}

QuantumGroupoidData quantum_groupoid(const WeakHopfData& h) {
    LinMap nu_inv = h.nu;
    if (h.nu_inv) {
        nu_inv = *h.nu_inv;
        if (compose(nu_inv, h.nu) != LinMap::identity(h.nu.field(), h.nu.src()) ||
            compose(h.nu, nu_inv) != LinMap::identity(h.nu.field(), h.nu.src()))
            throw AntipodeNotInvertible("given nu^-1 is not a two-sided inverse");
    } else if (auto inv = inverse(h.nu)) {
        nu_inv = *inv;
    } else {
        throw AntipodeNotInvertible("nu is singular");
    }
    QuantumGroupoidData g{quantum_category(h.bimonoid), h.nu, h.nu, h.nu, nu_inv, h.nu, h.nu};
    Env env = make_env(g.qc);
    env.add_generator("nu", h.nu);
    env.add_generator("nuinv", nu_inv);
    g.upsilon = evaluate("t ; nu ; nu ; t", env);
    g.upsilon_inv = evaluate("t ; nuinv ; nuinv ; t", env);
    g.theta = evaluate("m ; A delta ; c(A, A) A ; A mu ; A nu", env);
    g.theta_inv = evaluate("m ; delta A ; A mu ; A nuinv ; ci(A, A)", env);
    return g;
}

std::pair<LinMap, LinMap> varsigma_routes(const QuantumCategoryData& q) {
    Env env = with_coactions(q);
    return {evaluate("m ; gr A ; s C t", env), evaluate("m ; A gl ; s C t", env)};
}

Report check_quantum_groupoid(const QuantumGroupoidData& g) {
    const auto t0 = Clock::now();
    Env env = g.env();
    const auto [vs1, vs2] = varsigma_routes(g.qc);
    env.add_generator("vs", vs1);
    Report r{"quantum-groupoid", {}, 0};
    auto add = [&](const std::string& id, const std::string& cit, std::vector<std::string> sides) {
        r.items.push_back(eq(env, id, cit, std::move(sides)));
    };

    add("G1", "s nu = t", {"nu ; s", "t"});
    add("G2", "t nu = upsilon s", {"nu ; t", "s ; upsilon"});
    r.items.push_back(compare_maps("varsigma.routes", "(s x 1 x t)(gamma_r x 1) iota = (s x 1 x t)(1 x gamma_l) iota",
                                   vs1, vs2));
    add("G3.corrected", "varsigma theta = (1 x 1 x upsilon) c_{C, C (x) C} varsigma",
        {"theta ; vs", "vs ; c(C, C C) ; C C upsilon"});
    add("theta.comodule", "theta is a left A(x)3-comodule morphism P_l -> P_r",
        {"m ; dl ; A A dr ; A A A A nu ; A A c(A A, A) ; A A A theta",
         "theta ; dl ; A A dr ; A A A A nuinv ; ci(A A A A, A)"});
    add("theta.completion", "theta is an endomorphism of P", {"m ; theta ; m", "theta"});
    add("theta.inverse.left", "theta^-1 theta = 1_P", {"theta ; thetainv", "m"});
    add("theta.inverse.right", "theta theta^-1 = 1_P", {"thetainv ; theta", "m"});
    add("upsilon.completion", "upsilon is an endomorphism of C", {"eC ; upsilon ; eC", "upsilon"});
    add("upsilon.inverse.left", "upsilon^-1 upsilon = 1_C", {"upsilon ; upsiloninv", "eC"});
    add("upsilon.inverse.right", "upsilon upsilon^-1 = 1_C", {"upsiloninv ; upsilon", "eC"});
    add("upsilon.comonoid.comult", "upsilon: C with c c delta_C -> C preserves comultiplication",
        {"upsilon ; dC", "dC ; c(C, C) ; c(C, C) ; upsilon upsilon"});
    add("upsilon.comonoid.counit", "upsilon preserves the counit", {"upsilon ; epsC", "epsC"});
    add("nu.comonoid.comult", "nu: A with c delta -> A preserves comultiplication",
        {"nu ; delta", "delta ; c(A, A) ; nu nu"});
    add("nu.comonoid.counit", "nu preserves the counit", {"nu ; eps", "eps"});
    add("nu.inverse", "nu^-1 is a two-sided inverse", {"nu ; nuinv", "nuinv ; nu", "A"});
    return finish(std::move(r), t0);
}

}  // namespace wha
