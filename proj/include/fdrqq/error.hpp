#pragma once

#include <stdexcept>
#include <string>

namespace fdrqq {

// Every failure the library reports deliberately. The CLI maps all of
// these to exit code 2 (validation); genuine I/O failures are handled
// at the CLI layer and map to exit code 1.
enum class errc {
  empty_input,        // no data rows in the input
  non_numeric,        // a p field that does not parse as a real number
  out_of_range,       // p outside (0, 1]
  duplicate_id,       // two records share an id
  missing_column,     // csv/tsv header lacks the requested column
  invalid_level,      // FDR level q outside (0, 1]
  invalid_spec,       // malformed simulation spec or inconsistent arguments
  degenerate_extent,  // plot has no drawable extent (m = 1 and p = 1)
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace fdrqq
