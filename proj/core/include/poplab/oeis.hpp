#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "poplab/common.hpp"

namespace poplab {

/// Sequence prefixes keyed by A-number, as published (index 0 is the
/// first listed term, whatever the sequence's own offset).
struct OeisDb {
  std::map<std::string, std::vector<BigInt>> sequences;
  /// "line N: ..." for every skipped line.
  std::vector<std::string> warnings;

  std::size_t size() const { return sequences.size(); }
  const std::vector<BigInt>* find(std::string_view a_number) const;
};

/// Parses the stripped format: '#' comment lines and data lines
/// "Annnnnn ,t1,t2,...,". LF or CRLF endings; a UTF-8 byte order mark is
/// rejected. Malformed and duplicate lines are skipped with a warning.
/// Throws ParseError when no valid line remains.
OeisDb parse_stripped(std::istream& in, const std::string& source = "<input>");
OeisDb parse_stripped_text(std::string_view text);

/// Throws IoError if the file cannot be opened.
OeisDb load_stripped(const std::string& path);

struct Match {
  std::string a_number;
  /// Index in the published prefix where our a(1) sits.
  int offset = 0;
  /// Terms covered: compared terms plus leading-zero placeholders.
  int overlap = 0;
  /// Leading zeros of the published prefix standing in for our first
  /// terms (e.g. a(0)=a(1)=a(2)=0 conventions).
  int placeholders = 0;
  /// Index of the first published term actually compared.
  int first_agreement = 0;
};

/// Every sequence whose prefix contains `terms` (our a(1), a(2), ...) as a
/// block starting at an index <= max_shift, with at least min_overlap terms
/// covered. Sorted by (offset, A-number). Throws std::invalid_argument when
/// fewer than min_overlap terms are supplied.
std::vector<Match> match_sequence(const OeisDb& db, const std::vector<BigInt>& terms, int min_overlap = 7,
                                  int max_shift = 4);

}  // namespace poplab
