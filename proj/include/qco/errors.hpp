#pragma once

#include <stdexcept>
#include <string>

namespace qco {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gate construction / group machinery
struct NotProportionalToUnitary : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct TInGroup : Error { using Error::Error; };

// representation bookkeeping
struct OutOfRange : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// closed-form overhead quantities
struct InvalidSize : Error { using Error::Error; };
struct NoGapAtScale : Error { using Error::Error; };
struct DegenerateDelta : Error { using Error::Error; };
struct Divergent : Error { using Error::Error; };
struct EpsilonTooLarge : Error { using Error::Error; };

// ensembles / plumbing
struct EmptyInput : Error { using Error::Error; };
struct InputError : Error { using Error::Error; };

}  // namespace qco
