#ifndef ENHCAT_ERRORS_HPP
#define ENHCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace enhcat {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural data failed validation; `what()` carries a located witness.
struct ValidationError : Error {
    using Error::Error;
};

/// compose() was called on a non-composable pair.
struct NotComposable : Error {
    using Error::Error;
};

/// Source/target data of the inputs do not line up.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// An enumeration would exceed the configured candidate bound.
struct EnumerationBoundExceeded : Error {
    using Error::Error;
};

/// A colimit of categories did not close up within the generation bound.
struct FinitenessExceeded : Error {
    using Error::Error;
};

/// Supplied (eta, epsilon) fail a triangle identity.
struct NotAnAdjunction : Error {
    using Error::Error;
};

/// restrict_model produced a functor that is not a model.
struct ModelCheckFailed : Error {
    using Error::Error;
};

/// A transformation handed to classify_transformation is not valid.
struct InvalidTransformation : Error {
    using Error::Error;
};

/// The candidate correspondence does not commute with restriction/underlying.
struct CommutationFailure : Error {
    using Error::Error;
};

/// JSON input could not be parsed into the expected shape.
struct ParseError : Error {
    using Error::Error;
};

} // namespace enhcat

#endif
