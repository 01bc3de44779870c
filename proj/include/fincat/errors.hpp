#pragma once

#include <stdexcept>
#include <string>

namespace fincat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the category-file and functor-file parsers. line < 0 means the
// error is not tied to a single line (e.g. a missing composite detected at
// end of file).
struct ParseError : Error {
  int line;
  ParseError(int line_number, const std::string& message)
      : Error(line_number >= 0 ? "line " + std::to_string(line_number) + ": " + message : message),
        line(line_number) {}
};

// A search that is guaranteed a result by a precondition came up empty.
struct NoWitnessError : Error {
  int w;
  int f;
  NoWitnessError(int w_id, int f_id, const std::string& message) : Error(message), w(w_id), f(f_id) {}
};

// Two roofs or literal strings were expected to share source and target.
struct ParallelismError : Error {
  using Error::Error;
};

// Two roofs or morphisms were expected to be composable.
struct ComposabilityError : Error {
  using Error::Error;
};

// Oracle bounds too small for the inputs.
struct BoundsError : Error {
  using Error::Error;
};

// An operation was invoked outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// A functor fails to map the distinguished class to isomorphisms.
struct NotLocalError : Error {
  int w;
  NotLocalError(int w_id, const std::string& message) : Error(message), w(w_id) {}
};

}  // namespace fincat
