#include "ordpath/errors.hpp"

namespace ordpath {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::host_too_small: return "host-too-small";
    case errc::too_sparse: return "too-sparse";
    case errc::not_bipartite: return "not-bipartite";
    case errc::size_limit: return "size-limit";
    case errc::resource_limit: return "resource-limit";
    case errc::window_miss: return "window-miss";
    case errc::incomplete_model: return "incomplete-model";
    case errc::encoding_bug: return "encoding-bug";
    case errc::parse_error: return "parse-error";
    case errc::io_error: return "io-error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace ordpath
