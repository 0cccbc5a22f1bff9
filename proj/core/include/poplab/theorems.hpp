#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "poplab/common.hpp"
#include "poplab/enumerator.hpp"
#include "poplab/pop.hpp"
#include "poplab/report.hpp"

namespace poplab {

enum class Method {
  ClosedForm,
  LinearRecurrence,
  RationalGf,
  AlgebraicGf,
  BinomialSum,
  Composition,
  BijectionOracle,
  ExternalOracleNone,
};

/// "closed-form", "linear-recurrence+initials", "rational-gf", ...
std::string method_name(Method m);

/// a(0..n_max).
using SequenceFn = std::function<std::vector<BigInt>(int n_max)>;

/// One row of the printed tables of known POP enumerations.
struct TableRow {
  int table = 0;
  std::vector<std::string> oeis_ids;  // a row may cite two A-numbers
  Pop pop;
  std::vector<BigInt> prefix;  // a(1), a(2), ...

  std::string oeis() const;  // ids joined by '/'
};

/// Rows of the four tables of proved results (23 of length 4, 6 of length 5).
const std::vector<TableRow>& table_rows();

/// The row citing `a_number`, or nullptr.
const TableRow* find_table_row(std::string_view a_number);

/// The row whose POP equals `p` exactly, or nullptr.
const TableRow* find_table_row(const Pop& p);

struct ConjectureEntry {
  std::string oeis_id;
  Pop pop;
  std::vector<BigInt> expected_prefix;  // a(1..8)
};

/// The six conjectured length-5 connections.
const std::vector<ConjectureEntry>& conjecture_entries();

/// A second, independent evaluation that must agree with the canonical one
/// for n >= valid_from.
struct AlternateMethod {
  std::string name;
  Method method = Method::ClosedForm;
  SequenceFn eval;
  int valid_from = 0;
};

/// A formula evaluated exactly as printed; where it departs from the
/// canonical sequence the report carries a note instead of failing.
struct StatedClaim {
  std::string text;
  SequenceFn eval;
};

struct TheoremEntry {
  std::string id;
  std::string statement;
  Pop pop;
  Method method = Method::ClosedForm;
  std::string oeis_id;
  std::vector<BigInt> expected_prefix;  // table terms a(1..), may be empty
  SequenceFn canonical;
  std::vector<AlternateMethod> alternates;
  std::vector<StatedClaim> stated;
  std::vector<std::string> notes;
};

/// The default instance of every registered result, in registry order.
std::vector<std::string> theorem_ids();

/// Resolves "thm-3.6" or a family instance such as "thm-2.2:k=5" or
/// "thm-2.4:base=thm-3.22,s=1,i=0". Throws std::invalid_argument for
/// unknown ids or parameters.
TheoremEntry find_theorem(std::string_view id);

/// a(0..n_max) by the entry's canonical method.
std::vector<BigInt> theorem_sequence(std::string_view id, int n_max = 20);

/// Largest n checked by default: 9 for length-4 POPs, 8 otherwise.
int default_verify_nmax(const TheoremEntry& entry);

/// Formula against brute force and the table prefix for n = 0..n_max,
/// plus agreement of every alternate method and notes for stated claims
/// that depart from the canonical sequence.
Report verify_theorem(std::string_view id, int n_max, const CountOptions& options = {});

/// Brute force against the conjectured prefix; passing means supported at
/// this range only.
Report check_conjecture(const ConjectureEntry& entry, int n_max = 8, const CountOptions& options = {});

}  // namespace poplab
