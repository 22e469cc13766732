#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace curvecomp {

enum class ErrorKind {
    ParseError,
    InvalidArgument,
    ZeroInput,
    NotDivisible,
    NotSquarefree,
    CommonComponent,
    InternalLimit,
    DegenerateConditions,
    MapUndefinedOnCurve,
    NonRationalCenter,
    NonRationalInfinitelyNearPoint,
    BranchingChain,
    NotContractible,
    RankNotOne,
    UnknownCase,
    Inadmissible,
    DegenerateComposition,
    NonRationalBasePoint,
    Contracted,
    UnaccountedFactor,
    ForbiddenLambda,
    FigureMismatch,
};

const char* kind_name(ErrorKind kind);

/// Every failure in the library is an Error tagged with its kind; `detail` carries
/// structured context (offending polynomial, lattice snapshot, ...) for reporting.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, nlohmann::json detail = nullptr);

    ErrorKind kind() const { return kind_; }
    const nlohmann::json& detail() const { return detail_; }

private:
    ErrorKind kind_;
    nlohmann::json detail_;
};

}  // namespace curvecomp
