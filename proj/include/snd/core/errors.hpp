#ifndef SND_CORE_ERRORS_HPP
#define SND_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snd {

// Bad input data or bad arguments. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Solver ran into an iteration cap or numerical stall. CLI maps this to exit code 3.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem trouble. CLI maps this to exit code 4.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snd

#endif
