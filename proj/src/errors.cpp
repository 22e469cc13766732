#include "curvecomp/errors.hpp"

namespace curvecomp {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::CommonComponent: return "CommonComponent";
        case ErrorKind::InternalLimit: return "InternalLimit";
        case ErrorKind::DegenerateConditions: return "DegenerateConditions";
        case ErrorKind::MapUndefinedOnCurve: return "MapUndefinedOnCurve";
        case ErrorKind::NonRationalCenter: return "NonRationalCenter";
        case ErrorKind::NonRationalInfinitelyNearPoint: return "NonRationalInfinitelyNearPoint";
        case ErrorKind::BranchingChain: return "BranchingChain";
        case ErrorKind::NotContractible: return "NotContractible";
        case ErrorKind::RankNotOne: return "RankNotOne";
        case ErrorKind::UnknownCase: return "UnknownCase";
        case ErrorKind::Inadmissible: return "Inadmissible";
        case ErrorKind::DegenerateComposition: return "DegenerateComposition";
        case ErrorKind::NonRationalBasePoint: return "NonRationalBasePoint";
        case ErrorKind::Contracted: return "Contracted";
        case ErrorKind::UnaccountedFactor: return "UnaccountedFactor";
        case ErrorKind::ForbiddenLambda: return "ForbiddenLambda";
        case ErrorKind::FigureMismatch: return "FigureMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace curvecomp
