#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphharm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that could not be read or parsed (files, CSV rows, edge lines).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph construction request violated the simple-graph invariants.
class GraphError : public Error {
 public:
  enum class Kind { InvalidEndpoint, NonPositiveWeight, DuplicateEdge, SelfLoop };

  GraphError(Kind kind, std::size_t edge_index, const std::string& what)
      : Error(what), kind_(kind), edge_index_(edge_index) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  Kind kind_;
  std::size_t edge_index_;
};

/// A quantity that is only defined on connected graphs was requested on a
/// disconnected one.
class DisconnectedGraphError : public Error {
 public:
  explicit DisconnectedGraphError(std::size_t components)
      : Error("graph is disconnected (" + std::to_string(components) + " components)"),
        components_(components) {}

  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

/// Mathematical precondition failure other than connectivity (e.g. deleting a
/// bridge, a constant sweep vector, a degenerate ranking).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bad parameter values (ranks, cluster counts, unknown names).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace graphharm
