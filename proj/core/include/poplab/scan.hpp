#pragma once

#include <string>
#include <vector>

#include "poplab/enumerator.hpp"
#include "poplab/oeis.hpp"
#include "poplab/pop.hpp"

namespace poplab {

struct ScanOptions {
  int length = 4;
  int n_max = 7;
  CountOptions count;
  /// Optional; without it no A-numbers are attached.
  const OeisDb* db = nullptr;
  int min_overlap = 7;
};

/// One symmetry orbit (label complement and dual), whose members are
/// Wilf-equivalent by symmetry.
struct ScanOrbit {
  ClassKey key;
  std::string pop;  // the member whose matrix code is the key
  int size = 0;
};

/// POPs whose counts agree for n <= n_max: an empirical class only.
struct ScanClass {
  std::vector<BigInt> counts;  // a(1..n_max)
  ScanOrbit representative;    // orbit with the least key
  std::vector<ScanOrbit> orbits;
  int pop_count = 0;
  std::vector<std::string> matches;  // A-numbers, match order
};

struct ScanResult {
  int length = 0;
  int n_max = 0;
  int pops_processed = 0;
  int orbit_count = 0;
  std::vector<ScanClass> classes;  // ordered by counts

  /// {"schema": 1, ...}; byte-identical for identical inputs.
  std::string to_json() const;
};

/// Enumerates every POP of the given length, counts one member per
/// symmetry orbit and groups orbits by their count prefix.
ScanResult scan_pops(const ScanOptions& options);

}  // namespace poplab
