#pragma once

#include <stdexcept>
#include <string>

namespace hitwalk {

// Every failure the library reports, tagged so callers (and the CLI exit
// codes) can distinguish them without parsing messages.
enum class ErrorKind {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  invalid_parameter,
  bad_format,
  edge_count_mismatch,
  not_a_tree,
  not_adjacent,
  disconnected,
  isolated_vertex,
  unreachable,
  singular_system,
  all_walks_truncated,
  comparison_mismatch,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hitwalk
