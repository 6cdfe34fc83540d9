#include "wha/cauchy.hpp"

#include <chrono>

#include "wha/errors.hpp"
#include "wha/linalg.hpp"
#include "wha/registry.hpp"

namespace wha {

QObject QObject::make(LinMap e) {
    if (e.src() != e.tgt()) throw NotIdempotent("idempotent must be an endomorphism");
    if (compose(e, e) != e) throw NotIdempotent("e . e != e");
    Space x = e.src();
    return QObject{std::move(x), std::move(e)};
}

QMorphism QMorphism::make(QObject src, QObject tgt, LinMap f) {
    if (f.src() != src.carrier || f.tgt() != tgt.carrier) throw DomainMismatch("carrier mismatch");
    if (compose(tgt.e, compose(f, src.e)) != f) throw DomainMismatch("e' f e != f");
    return QMorphism{std::move(src), std::move(tgt), std::move(f)};
}

QObject q_embed(Field f, const Space& x) { return QObject{x, LinMap::identity(f, x)}; }

QMorphism q_identity(const QObject& x) { return QMorphism{x, x, x.e}; }

QMorphism q_compose(const QMorphism& g, const QMorphism& f) {
    if (!(f.tgt == g.src)) throw DomainMismatch("q_compose: target and source objects differ");
    return QMorphism{f.src, g.tgt, compose(g.f, f.f)};
}

QObject q_tensor(const QObject& a, const QObject& b) { return QObject{a.carrier * b.carrier, tensor(a.e, b.e)}; }

QMorphism q_tensor(const QMorphism& a, const QMorphism& b) {
    return QMorphism{q_tensor(a.src, b.src), q_tensor(a.tgt, b.tgt), tensor(a.f, b.f)};
}

std::uint32_t q_dim(const QObject& x) { return rank(x.e); }

QSplit q_split(const QMorphism& f) {
    if (!(f.src == f.tgt)) throw NotIdempotent("q_split needs an endomorphism");
    if (compose(f.f, f.f) != f.f) throw NotIdempotent("f . f != f");
    QObject mid{f.src.carrier, f.f};
    return QSplit{mid, QMorphism{f.src, mid, f.f}, QMorphism{mid, f.src, f.f}};
}

ObjectOfObjects object_of_objects(const WeakBimonoidData& w) {
    const QObject C = QObject::make(w.t);
    const LinMap tt = tensor(w.t, w.t);
    return ObjectOfObjects{C,
                           {w.carrier, compose(tt, w.delta), w.epsilon},
                           {w.carrier, compose(w.mu, tt), w.eta},
                           q_dim(C)};
}

Report check_object_of_objects(const WeakBimonoidData& w) {
    const auto t0 = std::chrono::steady_clock::now();
    Env env = make_env(w);
    auto specs = registry::object_of_objects_axioms();
    auto split = registry::double_splitting();
    specs.insert(specs.end(), split.begin(), split.end());
    Report rep = check_identities("object-of-objects", specs, env);

    const std::uint32_t rt = rank(w.t), rs = rank(w.s);
    Item dim{"objects.dimension", "dim C = rank t = rank s", Verdict::pass, std::nullopt,
             "dim C = " + std::to_string(rt)};
    if (rt != rs) {
        dim.verdict = Verdict::fail;
        dim.witness = Witness{"rank t", "rank s", std::to_string(rt), std::to_string(rs)};
    }
    rep.items.push_back(dim);
    rep.sort();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Report check_st_comonoid_morphisms(const WeakBimonoidData& w) {
    return check_identities("st-comonoid-morphisms", registry::st_comonoid_morphisms(), make_env(w));
}

Report check_weak_bimonoid_morphism(const LinMap& f, const WeakBimonoidData& A, const WeakBimonoidData& B) {
    if (f.src() != A.carrier || f.tgt() != B.carrier) throw DomainMismatch("f is not a map A -> B");
    Report rep{"weak-bimonoid-morphism", {}, 0};
    rep.items.push_back(compare_maps("morphism.mult", "f mu = mu (f x f)", compose(f, A.mu), compose(B.mu, tensor(f, f))));
    rep.items.push_back(compare_maps("morphism.unit", "f eta = eta", compose(f, A.eta), B.eta));
    rep.items.push_back(compare_maps("morphism.comult", "(f x f) delta = delta f", compose(tensor(f, f), A.delta),
                                     compose(B.delta, f)));
    rep.items.push_back(compare_maps("morphism.counit", "eps f = eps", compose(B.epsilon, f), A.epsilon));
    rep.sort();
    return rep;
}

InducedIso induced_c_iso(const LinMap& f, const WeakBimonoidData& A, const WeakBimonoidData& B) {
    Report pre = check_weak_bimonoid_morphism(f, A, B);
    for (const auto& it : pre.items)
        if (it.verdict == Verdict::fail) throw NotWeakBimonoidMorphism("f fails " + it.id);
    // consequences of being a morphism; a failure here is a library bug
    if (compose(f, A.t) != compose(B.t, f) || compose(f, A.s) != compose(B.s, f))
        throw Error("weak bimonoid morphism does not commute with s and t");

    const QObject CA = QObject::make(A.t), CB = QObject::make(B.t);
    const LinMap phi = compose(B.t, compose(f, A.t));

    // rho_C = (t x t) delta eta on A, sigma_C = eps mu (t x t) on B
    const LinMap rhoA = compose(tensor(A.t, A.t), compose(A.delta, A.eta));
    const LinMap sigmaB = compose(B.epsilon, compose(B.mu, tensor(B.t, B.t)));
    const LinMap inv = compose(tensor(A.t, sigmaB), compose(tensor({A.t, phi, B.t}), tensor(rhoA, B.t)));

    InducedIso out{QMorphism::make(CA, CB, phi), QMorphism::make(CB, CA, inv)};
    if (compose(inv, phi) != A.t || compose(phi, inv) != B.t) throw Error("induced map on C is not invertible");
    return out;
}

}  // namespace wha
