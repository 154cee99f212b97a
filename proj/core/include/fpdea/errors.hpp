#ifndef FPDEA_ERRORS_HPP
#define FPDEA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpdea {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The caller handed solve() a structurally broken program: dimension
/// mismatch or a non-finite coefficient. Always a caller bug, never a
/// data condition.
class MalformedProgram : public Error {
  public:
    using Error::Error;
};

/// Panel construction rejected the data (negative or non-finite entry,
/// shape mismatch).
class InvalidPanel : public Error {
  public:
    using Error::Error;
};

/// The evaluated DMU has no strictly positive input or no strictly
/// positive output, so the multiplier normalization cannot hold.
class DegenerateDmu : public Error {
  public:
    using Error::Error;
};

/// FDH evaluation of a point no observed DMU dominates. Cannot occur
/// when the evaluated DMU is a member of the panel.
class NoDominator : public Error {
  public:
    using Error::Error;
};

/// An FpStructure references out-of-range indices or pairs an index
/// with itself.
class InvalidFpStructure : public Error {
  public:
    using Error::Error;
};

/// A ScenarioConfig fails its domain constraints: zero dimensions or
/// counts, or a negative or non-finite inefficiency scale.
class InvalidScenario : public Error {
  public:
    using Error::Error;
};

/// Every support branch of a disjunction set is infeasible.
class NoFeasibleBranch : public Error {
  public:
    using Error::Error;
};

/// Isoquant construction requires a two-input, one-output panel.
class WrongDimensions : public Error {
  public:
    using Error::Error;
};

/// A file could not be written.
class IoFailure : public Error {
  public:
    using Error::Error;
};

/// An estimator failed inside a Monte Carlo run; carries the scenario
/// coordinates and replication index of the failing cell.
class ScenarioError : public Error {
  public:
    ScenarioError(const std::string& what, std::size_t replication)
        : Error(what), replication_(replication) {}
    std::size_t replication() const { return replication_; }

  private:
    std::size_t replication_;
};

}  // namespace fpdea

#endif
