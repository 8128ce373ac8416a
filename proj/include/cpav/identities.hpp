#pragma once

#include <string>

#include "cpav/common.hpp"

namespace cpav {

struct IdentityReport {
  std::string name;
  int N = 0;
  bool pass = false;
  int first_mismatch = -1;  // series order of the first disagreement, -1 if none
  std::string detail;
};

// Each check expands a closed generating function and compares it coefficient
// by coefficient against the generic cluster pipeline (or the verified
// recurrences, where noted). Caps are raised internally to cover order N.
IdentityReport check_clomon(int m, int N, const Config& cfg = {});
IdentityReport check_clo12435(int N, const Config& cfg = {});
IdentityReport check_clo1324(int N, const Config& cfg = {});
IdentityReport check_clo1324gen(int s, int m, int N, const Config& cfg = {});
IdentityReport check_funceq1423(int N, const Config& cfg = {});
IdentityReport check_sigma_relation(int n_max, const Config& cfg = {});

/// Dispatch by catalog name; p1/p2 carry the family parameters (e.g. m, or s and m).
IdentityReport check_identity(const std::string& name, int N, const Config& cfg = {}, int p1 = 0,
                              int p2 = 0);

}  // namespace cpav
