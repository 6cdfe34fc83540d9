#pragma once

#include <cstdint>

#include "wha/report.hpp"
#include "wha/structures.hpp"

namespace wha {

// Object (X, e) of the Cauchy completion: e is an idempotent on X.
struct QObject {
    Space carrier;
    LinMap e;

    static QObject make(LinMap e);  // throws NotIdempotent
    Field field() const { return e.field(); }
    bool operator==(const QObject& o) const { return e == o.e; }
};

// f: (X, e) -> (X', e') with e' f e = f. The identity of (X, e) is e.
struct QMorphism {
    QObject src, tgt;
    LinMap f;

    static QMorphism make(QObject src, QObject tgt, LinMap f);  // throws DomainMismatch
    bool operator==(const QMorphism& o) const { return src == o.src && tgt == o.tgt && f == o.f; }
};

QObject q_embed(Field f, const Space& x);
QMorphism q_identity(const QObject& x);
QMorphism q_compose(const QMorphism& g, const QMorphism& f);  // g . f
QObject q_tensor(const QObject& a, const QObject& b);
QMorphism q_tensor(const QMorphism& a, const QMorphism& b);
// rank of the idempotent
std::uint32_t q_dim(const QObject& x);

struct QSplit {
    QObject mid;  // (X, f)
    QMorphism r;  // (X, e) -> (X, f)
    QMorphism s;  // (X, f) -> (X, e)
};
// f must be an idempotent endomorphism of (X, e); throws NotIdempotent.
QSplit q_split(const QMorphism& f);

// C = (A, t) with delta_C = (t x t) delta, eps_C = eps, mu_C = mu (t x t), eta_C = eta
struct ObjectOfObjects {
    QObject C;
    ComonoidData comonoid;
    MonoidData monoid;
    std::uint32_t dim = 0;
};
ObjectOfObjects object_of_objects(const WeakBimonoidData& w);

// separable Frobenius structure of C, both splittings of t, and dim C = rank t = rank s
Report check_object_of_objects(const WeakBimonoidData& w);
Report check_st_comonoid_morphisms(const WeakBimonoidData& w);

// Monoid and comonoid morphism laws for f: A -> B between weak bimonoids.
Report check_weak_bimonoid_morphism(const LinMap& f, const WeakBimonoidData& A, const WeakBimonoidData& B);

struct InducedIso {
    QMorphism iso;      // t f t: (A, t) -> (B, t)
    QMorphism inverse;  // Frobenius inverse on the objects-of-objects
};
// Throws NotWeakBimonoidMorphism.
InducedIso induced_c_iso(const LinMap& f, const WeakBimonoidData& A, const WeakBimonoidData& B);

}  // namespace wha
