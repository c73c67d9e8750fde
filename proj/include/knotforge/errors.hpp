#pragma once

#include <stdexcept>
#include <string>

namespace knotforge {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define KNOTFORGE_ERROR(Name)                 \
    class Name : public Error {               \
    public:                                   \
        explicit Name(const std::string& msg) \
            : Error(#Name ": " + msg) {}      \
    }

KNOTFORGE_ERROR(InvalidArgument);
KNOTFORGE_ERROR(NonInvertible);
KNOTFORGE_ERROR(OddLength);
KNOTFORGE_ERROR(IntermediateZero);
KNOTFORGE_ERROR(DegenerateProjection);
KNOTFORGE_ERROR(SingularCrossing);
KNOTFORGE_ERROR(VerticalWall);
KNOTFORGE_ERROR(EvenP);
KNOTFORGE_ERROR(OddDegree);
KNOTFORGE_ERROR(Asymmetric);
KNOTFORGE_ERROR(NearSingular);
KNOTFORGE_ERROR(UnsupportedResidue);
KNOTFORGE_ERROR(NoKnownPhases);
KNOTFORGE_ERROR(MalformedDiagram);

#undef KNOTFORGE_ERROR

}  // namespace knotforge
