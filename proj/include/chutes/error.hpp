#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chutes {

/// A D-edge was applied to a vertex that is not an exact e-th power.
/// `position` is the 1-based index of the offending edge in the label sequence.
class InvalidDownStep : public std::runtime_error {
 public:
  explicit InvalidDownStep(std::uint64_t position)
      : std::runtime_error("down-step at edge " + std::to_string(position) +
                           " leaves a vertex that is not an exact power"),
        position_(position) {}

  std::uint64_t position() const noexcept { return position_; }

 private:
  std::uint64_t position_;
};

/// A cutoff was supplied that is smaller than the certified bound, so first
/// appearances computed with it would not be provably minimal.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation was refused because it would exceed a configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chutes
