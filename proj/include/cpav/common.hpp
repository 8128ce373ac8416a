#pragma once

#include <stdexcept>
#include <string>

namespace cpav {

// Malformed inputs: bad pattern text, inconsistent layouts, out-of-range parameters.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured cap.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared knobs. Every kernel takes the struct by const reference, so callers
// that know their posets are cheap (chains, near-chains) can raise caps
// deliberately instead of mutating global state.
struct Config {
  int brute_cap = 10;       // S_n scans: distributions up to n, avoider counts up to n+1
  int extension_cap = 24;   // largest poset accepted by the extension counter
  int cluster_n_max = 20;   // largest n for generic cluster polynomials
  int series_N = 25;        // default truncation order for series commands
  double tol = 1e-9;        // root agreement tolerance
  int threads = 0;          // 0 = OpenMP runtime default
  std::string cache_dir;    // empty = caching disabled
};

}  // namespace cpav
