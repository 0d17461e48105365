#pragma once

#include <stdexcept>
#include <string>

namespace dynlist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Self-loop, delete of an absent edge, insert of a present edge, or two
/// events on one edge in a single round.
class InvalidEvent : public Error {
 public:
  using Error::Error;
};

class BandwidthViolation : public Error {
 public:
  using Error::Error;
};

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

/// Stabilization did not finish within its round cap.
class StabilizeTimeout : public Error {
 public:
  using Error::Error;
};

class TraceFormatError : public Error {
 public:
  using Error::Error;
};

/// Bad scenario parameters (clique pattern for the membership construction,
/// non-square sizes for the cycle construction, ...).
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// Query not owned by the node, malformed cycle candidate, or a query kind
/// the algorithm does not answer.
class QueryError : public Error {
 public:
  using Error::Error;
};

/// A node addressed a message to a non-neighbor or sent twice on one edge.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dynlist
