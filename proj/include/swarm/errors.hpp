#pragma once

#include <stdexcept>
#include <string>

namespace swarm {

// Base for every error this library raises.
class SwarmError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInputError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class SingularityError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class NoEquilibriumError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class PreconditionError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class DegenerateSpectrumError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class GenerationError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class ConfigError : public SwarmError {
public:
    using SwarmError::SwarmError;
};

class DivergenceError : public SwarmError {
public:
    DivergenceError(const std::string& what, double time)
        : SwarmError(what), time_(time) {}

    // Simulation time of the step that produced the bad state.
    double time() const noexcept { return time_; }

private:
    double time_;
};

}  // namespace swarm
