#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pgph/persistence.hpp"

namespace pgph {

/// Canonical text form of a matrix: functor tag, size, upper triangle row-major.
std::string serialize(const PersistenceMatrix& m);
std::string serialize(const IntegralPersistenceMatrix& m);

/// Per-degree serialized matrices of one group; equal fingerprints mean
/// identical matrix sequences.
struct Fingerprint {
  std::string group;
  Functor functor = Functor::L;
  bool integral = false;
  std::vector<std::string> degrees;  ///< degree n at index n-1

  /// Key of the sequence restricted to degrees 1..t.
  std::string prefix(int t) const;
};

Fingerprint fingerprint(const GroupPtr& g, Functor functor, int t, bool integral = false);

/// Class count and largest class of a partition.
struct PartitionStats {
  std::size_t classes = 0;
  std::size_t max_class_size = 0;
  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

struct ClassificationReport {
  Functor functor = Functor::L;
  int max_degree = 0;
  bool integral = false;
  bool partial = false;  ///< some groups failed and were excluded

  PartitionStats stats;                      ///< partition by degrees 1..max_degree
  /// Least t' whose partition equals the one of degrees 1..max_degree.
  int strongest_t = 0;
  /// Degree at which an incremental computation sees the partition stop
  /// changing: strongest_t + 1, capped at max_degree.
  int stable_t = 0;
  bool stable_confirmed = false;  ///< strongest_t < max_degree
  std::vector<PartitionStats> cumulative;    ///< degrees 1..t' at index t'-1
  std::vector<PartitionStats> single;        ///< degree d alone at index d-1
  /// Least d >= stable_t with the most classes by P_d alone (least d overall if none).
  int single_degree = 0;
  std::vector<std::vector<std::string>> classes;  ///< members in input order
  std::vector<std::string> failures;         ///< "group: reason"
};

/// Partitions `groups` by their fingerprints. Groups are fingerprinted
/// concurrently on up to `threads` workers (0 = hardware concurrency).
ClassificationReport classify(const std::vector<GroupPtr>& groups, Functor functor, int t, bool integral = false,
                              unsigned threads = 0);

/// One CSV row per report: functor,(|C|,max),t,(|C|,max,d).
std::string csv_summary(const std::vector<ClassificationReport>& reports);

}  // namespace pgph
