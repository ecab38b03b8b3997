#pragma once

#include <stdexcept>
#include <string>

namespace lowtail {

// Exact evaluation was requested for an event whose support exceeds the cap.
class TooLargeForExact : public std::runtime_error {
 public:
  TooLargeForExact(int support, int cap)
      : std::runtime_error("too-large-for-exact: support spans " + std::to_string(support) +
                           " coordinates but max_exact_support is " + std::to_string(cap)),
        support_(support),
        cap_(cap) {}

  int support() const noexcept { return support_; }
  int cap() const noexcept { return cap_; }

 private:
  int support_;
  int cap_;
};

// Malformed instance text; the message names the offending field or position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A user-supplied dependency relation failed soundness validation.
class RelationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lowtail
