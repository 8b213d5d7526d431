#ifndef GCCHA_ERRORS_HPP
#define GCCHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gccha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction
struct DisconnectedGraph : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct DirectedGraphUnsupported : Error { using Error::Error; };

// Spectral basis
struct NotNormal : Error { using Error::Error; };
struct EigenFailure : Error { using Error::Error; };

// Shared
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

// Estimation
struct TooFewRealizations : Error { using Error::Error; };

// Canonical solves
struct SingularSpectralMatrix : Error { using Error::Error; };
struct RankTooLarge : Error { using Error::Error; };

// Synthesis / oracles
struct InvalidField : Error { using Error::Error; };
struct MeanNotProportionalToBasisVector : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };

// Pipelines
struct ZeroVectorImage : Error { using Error::Error; };
struct KTooLarge : Error { using Error::Error; };

}  // namespace gccha

#endif
