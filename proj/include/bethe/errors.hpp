#pragma once
#include <stdexcept>
#include <string>

namespace bethe {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSlot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidLabel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedN : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A check was asked to run on input that does not meet its hypotheses.
struct ConditionUnmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SamplingExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bethe
