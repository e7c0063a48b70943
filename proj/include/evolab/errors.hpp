#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evolab
{

enum class ErrorCode
{
    NonGeneric,
    DegenerateNormal,
    RankDeficient,
    ClosureViolation,
    NotAligned,
    NoFixedPoint,
    NonUnique,
    NoInvariantLine,
    AffinelyDegenerate,
    NoFixedVector,
    AmbiguousKernel,
    WindowDegenerate,
    WindowMismatch,
    DegeneratePairing,
    DegenerateForm,
    PairingFailure,
    PointPolygon,
    Divergence,
    NonSimpleZero,
    CuspWindow,
    VanishingTorsion,
    MismatchedIndicatrix,
    InvalidParameter,
    Io,
    Parse,
};

std::string_view to_string(ErrorCode code);

//! Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace evolab
