#pragma once

// Every identity checked by the library, transcribed once from its string
// diagram into the term syntax of diagram.hpp. Carrier object: A. Generators:
// mu, eta, delta, eps, and where defined s, t, r, nu, nuinv.
//
// Transcription conventions:
//  - diagrams are read top to bottom; a strand passing over another from
//    top-left to bottom-right is c, from top-right to bottom-left it is ci;
//  - operands of a junction are ordered by the x-position of the strands;
//  - where a picture elides the unit or counit circle, the term spells out
//    eta or eps explicitly and the entry's note says so.

#include <string>
#include <vector>

#include "wha/report.hpp"

namespace wha::registry {

// defining diagrams
extern const char* const kSource;  // s: A -> A
extern const char* const kTarget;  // t: A -> A
extern const char* const kRotatedTarget;  // r: A -> A

std::vector<IdentitySpec> monoid_axioms();
std::vector<IdentitySpec> comonoid_axioms();
std::vector<IdentitySpec> frobenius_axioms();
std::vector<IdentitySpec> separability();
std::vector<IdentitySpec> weak_bimonoid_axioms();
std::vector<IdentitySpec> source_properties();
std::vector<IdentitySpec> target_properties();
std::vector<IdentitySpec> source_target_interactions();
std::vector<IdentitySpec> rotated_target_properties();
std::vector<IdentitySpec> antipode_axioms();
std::vector<IdentitySpec> antipode_consequences();

// the usual bialgebra laws that fail for weak bimonoids in general
std::vector<IdentitySpec> strict_bialgebra_laws();

// object-of-objects C = (A, t) in the Cauchy completion; the identity of C is t
std::vector<IdentitySpec> object_of_objects_axioms();
std::vector<IdentitySpec> double_splitting();
std::vector<IdentitySpec> st_comonoid_morphisms();

}  // namespace wha::registry
