#pragma once

#include <stdexcept>
#include <string>

namespace ordpath {

// Failure categories raised by the library. The CLI maps these onto exit
// codes, so keep the set small and the meanings sharp.
enum class errc {
  invalid_argument,  // malformed parameters: odd length for a half family, N < n, ...
  host_too_small,    // host order below the guarantee threshold, best-effort off
  too_sparse,        // edge count at or below the extremal threshold, best-effort off
  not_bipartite,     // bipartite engine fed a host with edges inside a half
  size_limit,        // generic embedder refused an oversized pattern
  resource_limit,    // search node budget exhausted before a verdict
  window_miss,       // exact-value scan ran off the end of its window
  incomplete_model,  // CNF model leaves variables unassigned
  encoding_bug,      // decoded object failed validation against its own encoding
  parse_error,       // malformed input file
  io_error,          // file could not be read or written
  internal,          // broken invariant; always a bug in this library
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace ordpath
