#pragma once

#include <stdexcept>
#include <string>

namespace prebloch {

// Exit-code classes for the CLI contract:
//   1 = input error, 2 = mathematical precondition failure, 3 = verification mismatch.
enum class ErrorClass { Input = 1, Precondition = 2, Mismatch = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

#define PREBLOCH_ERROR(Name, Cls)                                             \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what = #Name)                        \
            : Error(ErrorClass::Cls, std::string(#Name) + ": " + what) {}     \
    }

PREBLOCH_ERROR(ZeroPoint, Precondition);
PREBLOCH_ERROR(DegenerateTriple, Precondition);
PREBLOCH_ERROR(DegenerateTuple, Precondition);
PREBLOCH_ERROR(DegenerateTetra, Precondition);
PREBLOCH_ERROR(BoundaryOfVertex, Precondition);
PREBLOCH_ERROR(BoundaryOfBasepoint, Precondition);
PREBLOCH_ERROR(MixedDegree, Precondition);
PREBLOCH_ERROR(UnnormalizableTuple, Precondition);
PREBLOCH_ERROR(InvalidDecoration, Input);
PREBLOCH_ERROR(RelatorViolation, Precondition);
PREBLOCH_ERROR(CuspFixedPointViolation, Precondition);
PREBLOCH_ERROR(NotRelativeCycle, Precondition);
PREBLOCH_ERROR(NotACycle, Precondition);
PREBLOCH_ERROR(DegreeCertificateFailed, Precondition);
PREBLOCH_ERROR(OnBoundaryFace, Precondition);
PREBLOCH_ERROR(SamplingExhausted, Precondition);
PREBLOCH_ERROR(BasePointCollision, Precondition);
PREBLOCH_ERROR(ParseError, Input);
PREBLOCH_ERROR(FieldMismatch, Input);
PREBLOCH_ERROR(InvariantViolation, Input);

#undef PREBLOCH_ERROR

}  // namespace prebloch
