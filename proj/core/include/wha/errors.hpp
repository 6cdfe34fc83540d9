#pragma once

#include <stdexcept>
#include <string>

namespace wha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct GradeOutsideGroup : Error { using Error::Error; };
struct NotIdempotent : Error { using Error::Error; };
struct NotGradePreserving : Error { using Error::Error; };

// diagram
struct UnknownName : Error { using Error::Error; };
struct BoundaryMismatch : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };

// structures / constructions / quantum
struct PreconditionFailed : Error { using Error::Error; };
struct NotFrobeniusMorphism : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct NotWeakBimonoidMorphism : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct NotSeparable : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct BadCharacteristic : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct NotAGroupoid : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct InvalidPresentation : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct AntipodeNotInvertible : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct PreconditionSquareFailed : PreconditionFailed { using PreconditionFailed::PreconditionFailed; };
struct NoSolution : Error { using Error::Error; };

}  // namespace wha
