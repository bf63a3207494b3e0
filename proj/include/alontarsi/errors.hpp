#pragma once

#include <stdexcept>
#include <string>

namespace alontarsi {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// graph-core
struct NonPlanarEmbedding : Error { using Error::Error; };
struct BoundaryNotCycle : Error { using Error::Error; };
struct EdgeNotOnBoundary : Error { using Error::Error; };
struct NotAChord : Error { using Error::Error; };
struct HasChord : Error { using Error::Error; };
struct NotNearTriangulation : Error { using Error::Error; };
struct CannotTriangulate : Error { using Error::Error; };

// algebra / eulerian / atn
struct TooManyEdges : Error { using Error::Error; };
struct ExceedsKMax : Error { using Error::Error; };
struct NoWitness : Error { using Error::Error; };

// planar-cert
struct PreconditionViolated : Error { using Error::Error; };
struct InternalProofViolation : Error { using Error::Error; };
struct EdgeSetMismatch : Error { using Error::Error; };
struct AuditFailure : Error { using Error::Error; };

// coloring
struct TooLarge : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

}  // namespace alontarsi
