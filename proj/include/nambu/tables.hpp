#ifndef NAMBU_TABLES_HPP
#define NAMBU_TABLES_HPP

#include <string>
#include <vector>

#include "nambu/registry.hpp"
#include "nambu/solve.hpp"

namespace nambu {

enum class Status {
  Pass,
  Fail,
  Skipped,      // check not applicable to the row
  NoClaim,      // blank table cell; solver output reported informationally
  OutOfClass,   // claim/frame outside the expression class (explained)
  Unverifiable, // printed row not reconstructible (explained)
  Degenerate,   // table formula collapses at this binding (explained)
  Trivial       // eta = 0 claim, solution space is {0}
};

std::string status_str(Status s);

struct RowReport {
  std::string table;    // "I" or "II"
  std::string entry;    // algebra id or algebra/sub identifier
  std::string binding;  // canonical binding string
  Status frame = Status::Skipped;       // Table I frame / Table II realized fields
  Status closure = Status::Skipped;     // Table II subalgebra closure
  Status membership = Status::Skipped;  // Theorem-4 affine membership
  Status fzero = Status::Skipped;       // claim vanishes at the identity
  Status fid = Status::Skipped;         // fundamental identity spot check
  std::vector<std::string> errata;      // errata attached to the row
  std::vector<std::string> notes;
  std::string solver_summary;           // deterministic solution-space digest

  bool explained() const;
  bool has_failure() const;
};

struct ErratumReport {
  std::string entry;
  std::string field;
  std::string check;
  bool printed_fails = false;
  bool corrected_passes = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<RowReport> rows;
  std::vector<ErratumReport> errata;
  unsigned long seed = 0;

  int unexplained_failures() const;
  int erratum_failures() const;  // errata whose justification does not execute
};

struct SweepOptions {
  bool skip_parameterized = false;  // --param-sweep none
  std::string only_algebra;         // restrict to one algebra id
  std::string only_table;           // "I", "II" or ""
};

/// Verifies one Table I row at one binding.
RowReport verify_table1(const AlgebraEntry& alg, const ParamEnv& env,
                        unsigned long seed);

/// Verifies one Table II row at one binding.
RowReport verify_table2(const AlgebraEntry& alg, const SubEntry& sub,
                        int sub_index, const ParamEnv& env, unsigned long seed);

/// Executes one erratum record: the printed text must fail its check and the
/// stored (corrected) text must pass it.
ErratumReport check_erratum(const AlgebraEntry& alg, const SubEntry* sub,
                            int sub_index, const Erratum& e, unsigned long seed);

/// Full harness over the registry and sweep; deterministic for fixed seed.
VerificationReport run_all(const Registry& reg, const SweepOptions& opt,
                           unsigned long seed);

/// Byte-deterministic report emission.
std::string emit_report_json(const VerificationReport& rep);
std::string emit_report_text(const VerificationReport& rep);

}  // namespace nambu

#endif
