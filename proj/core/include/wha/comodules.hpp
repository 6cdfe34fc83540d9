#pragma once

#include <string>
#include <vector>

#include "wha/cauchy.hpp"
#include "wha/report.hpp"
#include "wha/structures.hpp"

namespace wha {

// Right A-comodule (M, e) in the Cauchy completion: gamma: M -> M (x) A and
// an idempotent e with gamma e = gamma = (e x 1) gamma. For plain comodules e = 1.
struct ComoduleData {
    std::string name;
    Space space;
    LinMap gamma;
    LinMap e;

    static ComoduleData plain(std::string name, Space space, LinMap gamma);
    QObject object() const { return QObject{space, e}; }
};

// C-bicomodule structure induced on a comodule: gamma_l: M -> C (x) M,
// gamma_r: M -> M (x) C and the diagonal (s x 1 x t)(ci x 1)(1 x delta) gamma.
struct BicomoduleData {
    Space space;
    LinMap gamma_l, gamma_r, gamma;
};

ComoduleData regular_comodule(const WeakBimonoidData& w);  // A with delta
ComoduleData object_comodule(const WeakBimonoidData& w);   // C = (A, t) with delta t

Report check_comodule(const ComoduleData& M, const WeakBimonoidData& w);
BicomoduleData induce_bicomodule(const ComoduleData& M, const WeakBimonoidData& w);
Report check_bicomodule(const ComoduleData& M, const WeakBimonoidData& w);

// d = (1 (x) eps mu (x) 1)(gamma_M (x) t (x) 1): M (x) C (x) N -> M (x) N
LinMap cosplit_d(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w);
Report check_cosplit(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w);

// M (x)_C N = (M (x) N, m) with m from the simplified three-string form and
// gamma = (1 (x) 1 (x) mu)(1 (x) c (x) 1)(gamma_M (x) gamma_N).
ComoduleData tensor_over_C(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w);
// m = d (1 (x) gamma_l), idempotence, coaction laws, and image(m) against
// the kernel-computed equalizer of (gamma_r (x) 1, 1 (x) gamma_l)
Report check_tensor(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w);

struct UnitIsos {
    LinMap right_out;  // M (x)_C C -> M
    LinMap right_in;   // M -> M (x)_C C
    LinMap left_out;   // C (x)_C M -> M
    LinMap left_in;    // M -> C (x)_C M
};
UnitIsos unit_isos(const ComoduleData& M, const WeakBimonoidData& w);
Report check_unit_isos(const ComoduleData& M, const WeakBimonoidData& w);

// idempotents of (M (x)_C N) (x)_C P and M (x)_C (N (x)_C P) agree
Report check_associativity(const ComoduleData& M, const ComoduleData& N, const ComoduleData& P,
                           const WeakBimonoidData& w);

// coaction of UM (x)_C UN against that of U(M (x)_C N). With mutate_crossing
// the induced side uses c instead of c^-1 (a sanity mutation).
Report check_forgetful(const ComoduleData& M, const ComoduleData& N, const WeakBimonoidData& w,
                       bool mutate_crossing = false);

struct DualComodule {
    ComoduleData dual;
    LinMap ev;    // M* (x)_C M -> C
    LinMap coev;  // C -> M (x)_C M*
};
DualComodule dual_comodule(const ComoduleData& M, const WeakHopfData& h);
Report check_dual(const ComoduleData& M, const WeakHopfData& h);

// Everything above on the comodules A and C (and their duals when h has an antipode).
Report check_comodules(const WeakBimonoidData& w, const WeakHopfData* h);

}  // namespace wha
