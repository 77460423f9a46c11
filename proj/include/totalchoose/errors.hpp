#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totalchoose {

/// Malformed caller input: bad edge list, unparsable file, impossible generator request.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal guarantee. Reaching one of these means a violated
/// precondition or a bug; they are never swallowed.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoAvailableColor : public StructuralError {
 public:
  NoAvailableColor(std::string element, const std::string& what)
      : StructuralError(what), element_(std::move(element)) {}
  const std::string& element() const { return element_; }

 private:
  std::string element_;
};

/// The greedy pass reached an element at distance >= 2 with fewer than two
/// uncolored total neighbors.
class OrderInvariantViolated : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

class MinimumViolated : public StructuralError {
 public:
  MinimumViolated(std::string element, std::size_t have, std::size_t need)
      : StructuralError("residual list of " + element + " has " + std::to_string(have) +
                        " colors, need " + std::to_string(need)),
        element_(std::move(element)),
        have_(have),
        need_(need) {}
  const std::string& element() const { return element_; }
  std::size_t have() const { return have_; }
  std::size_t need() const { return need_; }

 private:
  std::string element_;
  std::size_t have_;
  std::size_t need_;
};

class Infeasible : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

class NoCycleThrough : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

class PlanLoopExceeded : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

/// Maximum degree below 3; outside the range the construction covers.
class DeltaTooSmall : public std::runtime_error {
 public:
  explicit DeltaTooSmall(int delta)
      : std::runtime_error("maximum degree " + std::to_string(delta) + " is below 3"),
        delta_(delta) {}
  int delta() const { return delta_; }

 private:
  int delta_;
};

class ListTooSmall : public std::runtime_error {
 public:
  ListTooSmall(std::string element, std::size_t have, std::size_t need)
      : std::runtime_error("list of " + element + " has " + std::to_string(have) +
                           " colors, need at least " + std::to_string(need)),
        element_(std::move(element)),
        have_(have),
        need_(need) {}
  const std::string& element() const { return element_; }
  std::size_t have() const { return have_; }
  std::size_t need() const { return need_; }

 private:
  std::string element_;
  std::size_t have_;
  std::size_t need_;
};

}  // namespace totalchoose
