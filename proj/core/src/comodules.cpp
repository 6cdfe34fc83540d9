#include "wha/comodules.hpp"

#include <chrono>

#include "wha/errors.hpp"
#include "wha/linalg.hpp"

namespace wha {

namespace {

// Env of the weak bimonoid plus named comodules: object X, coaction gX, idempotent eX.
struct Ctx {
    Env env;

    explicit Ctx(const WeakBimonoidData& w) : env(make_env(w)) {}
    explicit Ctx(const WeakHopfData& h) : env(make_env(h)) {}

    Ctx& add(const std::string& x, const ComoduleData& M) {
        env.add_object(x, M.space);
        env.add_generator("g" + x, M.gamma);
        env.add_generator("e" + x, M.e);
        return *this;
    }
    Ctx& gen(const std::string& name, LinMap m) {
        env.add_generator(name, std::move(m));
        return *this;
    }
    LinMap operator()(const std::string& text) const { return evaluate(text, env); }
    Item eq(const std::string& id, const std::string& citation, const std::string& lhs, const std::string& rhs) const {
        return check_identity({id, citation, {lhs, rhs}, ""}, env);
    }
};

std::string pair_name(const ComoduleData& M, const ComoduleData& N) { return M.name + "," + N.name; }

Report finish(Report r, std::chrono::steady_clock::time_point t0) {
    r.sort();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

const char* const kGammaL = "gM ; ci(M, A) ; s M";
const char* const kGammaR = "gM ; M t";

// simplified m for comodules registered as M and N
const char* const kM = "M gN ; gM ci(N, A) ; M (mu ; eps) N";
const char* const kGammaTensor = "gM gN ; M c(A, N) A ; M N mu";

}  // namespace

ComoduleData ComoduleData::plain(std::string name, Space space, LinMap gamma) {
    LinMap e = LinMap::identity(gamma.field(), space);
    return ComoduleData{std::move(name), std::move(space), std::move(gamma), std::move(e)};
}

ComoduleData regular_comodule(const WeakBimonoidData& w) { return ComoduleData::plain("A", w.carrier, w.delta); }

ComoduleData object_comodule(const WeakBimonoidData& w) {
    return ComoduleData{"C", w.carrier, compose(w.delta, w.t), w.t};
}

Report check_comodule(const ComoduleData& M, const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    Ctx cx(w);
    cx.add("M", M);
    const std::string p = "comodule[" + M.name + "].";
    Report r{"comodule", {}, 0};
    r.items.push_back(cx.eq(p + "coassociativity", "coaction: (gamma x 1) gamma = (1 x delta) gamma", "gM ; gM A",
                            "gM ; M delta"));
    r.items.push_back(cx.eq(p + "counit", "coaction: (1 x eps) gamma = identity of M", "gM ; M eps", "eM"));
    r.items.push_back(cx.eq(p + "idempotent", "idempotent of M is idempotent", "eM ; eM", "eM"));
    r.items.push_back(cx.eq(p + "absorbs.input", "coaction: gamma e = gamma", "eM ; gM", "gM"));
    r.items.push_back(cx.eq(p + "absorbs.output", "coaction: (e x 1) gamma = gamma", "gM ; eM A", "gM"));
    return finish(std::move(r), t0);
}

BicomoduleData induce_bicomodule(const ComoduleData& M, const WeakBimonoidData& w) {
    Ctx cx(w);
    cx.add("M", M);
    return BicomoduleData{M.space, cx(kGammaL), cx(kGammaR), cx("gM ; M delta ; ci(M, A) A ; s M t")};
}

Report check_bicomodule(const ComoduleData& M, const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    auto b = induce_bicomodule(M, w);
    Ctx cx(w);
    cx.add("M", M).gen("gl", b.gamma_l).gen("gr", b.gamma_r).gen("gd", b.gamma);
    const std::string p = "bicomodule[" + M.name + "].";
    Report r{"bicomodule", {}, 0};
    r.items.push_back(cx.eq(p + "left.coassociativity", "left C-coaction is coassociative for delta_C = (t x t) delta",
                            "gl ; A gl", "gl ; (delta ; t t) M"));
    r.items.push_back(cx.eq(p + "left.counit", "left C-coaction is counital", "gl ; eps M", "eM"));
    r.items.push_back(cx.eq(p + "right.coassociativity", "right C-coaction is coassociative for delta_C = (t x t) delta",
                            "gr ; gr A", "gr ; M (delta ; t t)"));
    r.items.push_back(cx.eq(p + "right.counit", "right C-coaction is counital", "gr ; M eps", "eM"));
    r.items.push_back(cx.eq(p + "square", "bicomodule: (1 x gamma_r) gamma_l = (gamma_l x 1) gamma_r", "gl ; A gr",
                            "gr ; gl A"));
    r.items.push_back(cx.eq(p + "diagonal", "the diagonal coaction is either composite of gamma_l and gamma_r", "gd",
                            "gl ; A gr"));
    r.items.push_back(cx.eq(p + "left.from_diagonal", "gamma_l is the diagonal followed by the counit", "gd ; A M eps",
                            "gl"));
    r.items.push_back(cx.eq(p + "right.from_diagonal", "gamma_r is the diagonal followed by the counit", "gd ; eps M A",
                            "gr"));
    return finish(std::move(r), t0);
}

LinMap cosplit_d(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w) {
    Ctx cx(w);
    cx.add("M", M).add("N", N);
    return cx("gM t N ; M (mu ; eps) N");
}

Report check_cosplit(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    Ctx cx(w);
    cx.add("M", M).add("N", N);
    cx.gen("d", cx("gM t N ; M (mu ; eps) N"));
    cx.gen("grM", cx(kGammaR));
    cx.gen("glN", cx("gN ; ci(N, A) ; s N"));
    const std::string p = "cosplit[" + pair_name(M, N) + "].";
    Report r{"cosplit", {}, 0};
    r.items.push_back(cx.eq(p + "retraction", "cosplit pair: d (gamma_r x 1) = 1", "eM eN ; grM N ; d", "eM eN"));
    r.items.push_back(cx.eq(p + "fork", "cosplit pair: (gamma_r x 1) d (1 x gamma_l) = (1 x gamma_l) d (1 x gamma_l)",
                            "eM eN ; M glN ; d ; grM N", "eM eN ; M glN ; d ; M glN"));
    return finish(std::move(r), t0);
}

ComoduleData tensor_over_C(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w) {
    Ctx cx(w);
    cx.add("M", M).add("N", N);
    return ComoduleData{"(" + M.name + "." + N.name + ")", M.space * N.space, cx(kGammaTensor), cx(kM)};
}

Report check_tensor(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    const ComoduleData T = tensor_over_C(M, N, w);
    Ctx cx(w);
    cx.add("M", M).add("N", N);
    cx.gen("d", cx("gM t N ; M (mu ; eps) N"));
    cx.gen("glN", cx("gN ; ci(N, A) ; s N"));
    cx.gen("m", T.e).gen("gT", T.gamma);
    const std::string p = "tensor[" + pair_name(M, N) + "].";
    Report r{"tensor", {}, 0};
    r.items.push_back(cx.eq(p + "simplified_m", "m = d (1 x gamma_l) agrees with its simplified form", "M glN ; d", "m"));
    r.items.push_back(cx.eq(p + "idempotent", "m is idempotent", "m ; m", "m"));
    r.items.push_back(cx.eq(p + "coaction.absorbs_input", "gamma m = gamma on M (x) N", "m ; gT", "gT"));
    r.items.push_back(cx.eq(p + "coaction.absorbs_output", "(m x 1) gamma = gamma on M (x) N", "gT ; m A", "gT"));

    auto rep = check_comodule(T, w);
    for (auto& it : rep.items) r.items.push_back(std::move(it));

    // image(m) against the equalizer of (gamma_r x 1, 1 x gamma_l), inside the
    // image of e_M (x) e_N
    const LinMap f = cx("gM N ; M t N");
    const LinMap g = cx("M glN");
    const Splitting amb = split_idempotent(tensor(M.e, N.e));
    Equalizer eqz = equalizer(compose(f, amb.section), compose(g, amb.section));
    const LinMap incl = compose(amb.section, eqz.incl);
    const std::uint32_t dim_m = rank(T.e), dim_eq = eqz.object.dim();
    Item dim{p + "equalizer.dimension", "rank m = dimension of the equalizer of (gamma_r x 1, 1 x gamma_l)",
             Verdict::pass, std::nullopt, "dim = " + std::to_string(dim_m)};
    if (dim_m != dim_eq) {
        dim.verdict = Verdict::fail;
        dim.witness = Witness{"rank m", "dim equalizer", std::to_string(dim_m), std::to_string(dim_eq)};
    }
    r.items.push_back(dim);
    auto contain = [&](const std::string& id, const std::string& cit, const LinMap& big, const LinMap& small,
                       const std::string& what) {
        Item it{id, cit, Verdict::pass, std::nullopt, {}};
        if (!column_span_contains(big, small)) {
            it.verdict = Verdict::fail;
            it.witness = Witness{what, "-", "not contained", "contained"};
        }
        r.items.push_back(it);
    };
    contain(p + "equalizer.contains_image", "image of m lies in the equalizer", incl, T.e, "image(m)");
    contain(p + "equalizer.inside_image", "the equalizer lies in the image of m", T.e, incl, "equalizer");
    return finish(std::move(r), t0);
}

UnitIsos unit_isos(const ComoduleData& M, const WeakBimonoidData& w) {
    Ctx cx(w);
    cx.add("M", M);
    return UnitIsos{cx("gM t ; M (mu ; eps)"), cx("gM ; M t"), cx("t gM ; A ci(M, A) ; (mu ; eps) M"),
                    cx("gM ; ci(M, A) ; s M")};
}

Report check_unit_isos(const ComoduleData& M, const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    const ComoduleData C = object_comodule(w);
    const ComoduleData MC = tensor_over_C(M, C, w), CM = tensor_over_C(C, M, w);
    const UnitIsos u = unit_isos(M, w);
    Ctx cx(w);
    cx.add("M", M);
    cx.gen("a", u.right_out).gen("b", u.right_in).gen("c", u.left_out).gen("d", u.left_in);
    cx.gen("mMC", MC.e).gen("gMC", MC.gamma).gen("mCM", CM.e).gen("gCM", CM.gamma);
    const std::string p = "unit[" + M.name + "].";
    Report r{"unit-isos", {}, 0};
    r.items.push_back(cx.eq(p + "right.out_in", "M -> M (x)_C C -> M is the identity", "b ; a", "eM"));
    r.items.push_back(cx.eq(p + "right.in_out", "M (x)_C C -> M -> M (x)_C C is the identity", "a ; b", "mMC"));
    r.items.push_back(cx.eq(p + "left.out_in", "M -> C (x)_C M -> M is the identity", "d ; c", "eM"));
    r.items.push_back(cx.eq(p + "left.in_out", "C (x)_C M -> M -> C (x)_C M is the identity", "c ; d", "mCM"));
    r.items.push_back(cx.eq(p + "right.out.morphism", "M (x)_C C -> M is a morphism of the completion", "mMC ; a ; eM", "a"));
    r.items.push_back(cx.eq(p + "right.in.morphism", "M -> M (x)_C C is a morphism of the completion", "eM ; b ; mMC", "b"));
    r.items.push_back(cx.eq(p + "left.out.morphism", "C (x)_C M -> M is a morphism of the completion", "mCM ; c ; eM", "c"));
    r.items.push_back(cx.eq(p + "left.in.morphism", "M -> C (x)_C M is a morphism of the completion", "eM ; d ; mCM", "d"));
    r.items.push_back(cx.eq(p + "right.out.comodule", "M (x)_C C -> M is a comodule morphism", "a ; gM", "gMC ; a A"));
    r.items.push_back(cx.eq(p + "right.in.comodule", "M -> M (x)_C C is a comodule morphism", "b ; gMC", "gM ; b A"));
    r.items.push_back(cx.eq(p + "left.out.comodule", "C (x)_C M -> M is a comodule morphism", "c ; gM", "gCM ; c A"));
    r.items.push_back(cx.eq(p + "left.in.comodule", "M -> C (x)_C M is a comodule morphism", "d ; gCM", "gM ; d A"));
    r.items.push_back(cx.eq(p + "lemma.right", "gamma_{M(x)C} (1 x t) through gamma and mu", "M t ; gMC",
                            "gM t ; gM mu ; M t A"));
    r.items.push_back(cx.eq(p + "lemma.left", "gamma_{C(x)M} (t x 1) through gamma, mu and the source map",
                            "t M ; gCM", "t gM ; c(A, M) A ; gM mu ; ci(M, A) A ; s M A"));
    return finish(std::move(r), t0);
}

Report check_associativity(const ComoduleData& M, const ComoduleData& N, const ComoduleData& P,
                           const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    const ComoduleData MN = tensor_over_C(M, N, w), NP = tensor_over_C(N, P, w);
    const ComoduleData MN_P = tensor_over_C(MN, P, w), M_NP = tensor_over_C(M, NP, w);
    const LinMap u = compose(MN_P.e, tensor(MN.e, P.e));
    const LinMap v = compose(M_NP.e, tensor(M.e, NP.e));
    Report r{"associativity", {}, 0};
    r.items.push_back(compare_maps("assoc[" + M.name + "," + N.name + "," + P.name + "]",
                                   "(M (x)_C N) (x)_C P and M (x)_C (N (x)_C P) have equal idempotents", u, v));
    r.items.push_back(compare_maps("assoc[" + M.name + "," + N.name + "," + P.name + "].coaction",
                                   "the two triple tensor coactions agree", MN_P.gamma, M_NP.gamma));
    return finish(std::move(r), t0);
}

Report check_forgetful(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w, bool mutate_crossing) {
    const auto t0 = std::chrono::steady_clock::now();
    const ComoduleData T = tensor_over_C(M, N, w);
    Ctx cx(w);
    cx.add("M", M).add("N", N);
    cx.gen("glM", cx(kGammaL)).gen("grN", cx("gN ; N t")).gen("m", T.e).gen("gT", T.gamma);
    const std::string cross = mutate_crossing ? "c(M N, A)" : "ci(M N, A)";
    Report r{"forgetful", {}, 0};
    r.items.push_back(cx.eq("forgetful[" + pair_name(M, N) + "]",
                            "U(M (x)_C N) and UM (x)_C UN carry the same C-bicomodule coaction", "m ; glM grN",
                            "gT ; M N delta ; " + cross + " A ; s M N t"));
    return finish(std::move(r), t0);
}

DualComodule dual_comodule(const ComoduleData& M, const WeakHopfData& h) {
    Ctx cx(h);
    cx.add("M", M);
    LinMap gamma = cx("M* coev(M) ; M* gM M* ; ev(M) A M* ; c(A, M*) ; M* nu");
    LinMap e = cx("M* coev(M) ; M* eM M* ; ev(M) M*");
    ComoduleData dual{M.name + "*", dual_space(M.gamma.field(), M.space).dual, gamma, e};
    return DualComodule{dual, cx("M* gM ; ev(M) A ; t"),
                        cx("coev(M) A ; gM M* t ; M c(A, M*) A ; M M* r A ; M M* mu ; M M* eps")};
}

Report check_dual(const ComoduleData& M, const WeakHopfData& h) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& w = h.bimonoid;
    const DualComodule D = dual_comodule(M, h);
    const ComoduleData C = object_comodule(w);
    const ComoduleData DM = tensor_over_C(D.dual, M, w), MD = tensor_over_C(M, D.dual, w);
    const UnitIsos uM = unit_isos(M, w), uD = unit_isos(D.dual, w);

    Report r = check_comodule(D.dual, w);
    r.suite = "dual";
    Ctx cx(h);
    cx.add("M", M);
    cx.gen("gMs", D.dual.gamma).gen("eMs", D.dual.e);
    cx.gen("ev", D.ev).gen("coev", D.coev).gen("gC", C.gamma);
    cx.gen("mL", DM.e).gen("gL", DM.gamma).gen("mR", MD.e).gen("gR", MD.gamma);
    cx.gen("aM", uM.right_out).gen("dM", uM.left_in).gen("bD", uD.right_in).gen("cD", uD.left_out);
    const std::string p = "dual[" + M.name + "].";
    r.items.push_back(cx.eq(p + "ev.completion", "e: M* (x)_C M -> C is a morphism of the completion", "mL ; ev ; t", "ev"));
    r.items.push_back(cx.eq(p + "coev.completion", "n: C -> M (x)_C M* is a morphism of the completion", "t ; coev ; mR",
                            "coev"));
    r.items.push_back(cx.eq(p + "ev.comodule", "e is a comodule morphism", "ev ; gC", "gL ; ev A"));
    r.items.push_back(cx.eq(p + "coev.comodule", "n is a comodule morphism", "coev ; gR", "gC ; coev A"));
    r.items.push_back(cx.eq(p + "triangle.i", "M -> C M -> M M* M -> M C -> M is the identity", "dM ; coev M ; M ev ; aM",
                            "eM"));
    r.items.push_back(cx.eq(p + "triangle.ii", "M* -> M* C -> M* M M* -> C M* -> M* is the identity",
                            "bD ; M* coev ; ev M* ; cD", "eMs"));
    return finish(std::move(r), t0);
}

Report check_comodules(const WeakBimonoidData& w, const WeakHopfData* h) {
    const auto t0 = std::chrono::steady_clock::now();
    const ComoduleData A = regular_comodule(w), C = object_comodule(w);
    const ComoduleData AA = tensor_over_C(A, A, w);
    const std::vector<ComoduleData> base = {A, C};
    Report r{"comodules", {}, 0};
    for (const auto& M : {A, C, AA}) {
        r.append(check_comodule(M, w));
        r.append(check_bicomodule(M, w));
        r.append(check_unit_isos(M, w));
    }
    for (const auto& M : base)
        for (const auto& N : base) {
            r.append(check_cosplit(M, N, w));
            r.append(check_tensor(M, N, w));
            r.append(check_forgetful(M, N, w));
            for (const auto& P : base) r.append(check_associativity(M, N, P, w));
        }
    if (h) {
        r.append(check_dual(A, *h));
        r.append(check_dual(C, *h));
    }
    return finish(std::move(r), t0);
}

}  // namespace wha
