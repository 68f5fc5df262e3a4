#pragma once

#include <stdexcept>
#include <string>

namespace seqgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParam : Error { using Error::Error; };
struct PrecisionInsufficient : Error { using Error::Error; };
struct DuplicateValues : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct InvalidPermutation : Error { using Error::Error; };
struct LengthsNotNormalized : Error { using Error::Error; };
struct NonpositiveLength : Error { using Error::Error; };
struct NoSuchEdge : Error { using Error::Error; };
struct LoopContraction : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct InvalidRotation : Error { using Error::Error; };
struct DegenerateGraph : Error { using Error::Error; };
struct DegenerateConnectionSet : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace seqgraph
