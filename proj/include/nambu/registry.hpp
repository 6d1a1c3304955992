#ifndef NAMBU_REGISTRY_HPP
#define NAMBU_REGISTRY_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nambu/liealg.hpp"

namespace nambu {

struct ParamSpec {
  std::string name;
  std::vector<Rat> exclude;
  std::vector<Rat> sweep;  // empty = default sweep minus exclusions
};

/// Jointly swept parameter pair, e.g. rational (cos phi, sin phi) points.
struct PairSweep {
  std::string first, second;
  std::vector<std::pair<Rat, Rat>> values;
};

struct ClaimComp {
  std::string label;  // strictly increasing coordinate labels, e.g. "124"
  std::string expr;
};

/// One case of a (possibly piecewise) claimed structure.
struct ClaimCase {
  std::string cond;  // "" = unconditional; "a=-1", "a+b=0 & a!=-1", ...
  std::vector<ClaimComp> comps;
};

/// Machine-readable correction of printed table text, justified by an
/// executable check that fails on the printed text and passes on the
/// registry value.
struct Erratum {
  std::string field;    // constants | frame[i] | eta[i] | basis | fields[i]
  std::string check;    // parse | frame | jacobi | membership | closure | fields | fzero
  std::string printed;  // replacement value in registry syntax
  std::string note;
};

struct SubEntry {
  std::string type;                // claimed 3D classification label
  std::vector<std::string> basis;  // expressions in X1..X4 and parameters
  std::vector<ParamSpec> params;
  std::vector<PairSweep> pairs;
  std::vector<std::array<std::string, 4>> fields;  // realized rows
  std::vector<ClaimCase> eta;
  bool zeroclaim = false;     // the paper claims eta = 0
  std::string unverifiable;   // nonempty: printed row not reconstructible
  std::string outofclass;     // claim outside the expression class
  std::vector<Erratum> errata;
  std::vector<std::string> notes;
};

struct AlgebraEntry {
  std::string id;   // ASCII identifier, e.g. A_4_8, Aab_4_5
  std::string tex;  // display name, e.g. A_{4,8}
  int dim = 4;
  std::vector<ParamSpec> params;
  std::vector<PairSweep> pairs;
  std::vector<std::tuple<int, int, int, std::string>> constants;  // 1-based i<j
  std::vector<std::array<std::string, 4>> frame;  // row-major; empty = none
  std::string noframe;     // reason when no in-class frame exists
  std::vector<ClaimCase> eta;
  std::string noclaim;     // Table I cell is blank
  std::string outofclass;  // claim outside the expression class
  std::vector<SubEntry> subs;
  std::vector<Erratum> errata;
  std::vector<std::string> notes;

  LieAlgebraSpec spec() const;
};

struct Registry {
  std::vector<AlgebraEntry> entries;

  const AlgebraEntry* find(const std::string& id) const;
};

struct LoadIssue {
  std::string entry;
  std::string message;
};

/// Parses the registry format. Every entry is gated through exact Jacobi checks
/// over its sweep; failing entries are skipped and reported in `issues`
/// (throws JacobiViolation instead when issues == nullptr).
Registry registry_load(const std::string& path,
                       std::vector<LoadIssue>* issues = nullptr);
Registry registry_parse(std::istream& in, std::vector<LoadIssue>* issues = nullptr);

/// Canonical re-emission; load -> save -> load is the identity.
std::string registry_save(const Registry& reg);

/// Default parameter sweep {-2,-1,-1/2,1/2,1,2} minus exclusions, crossed
/// over all parameters, then crossed with pair sweeps.
std::vector<ParamEnv> sweep_bindings(const std::vector<ParamSpec>& params,
                                     const std::vector<PairSweep>& pairs);

/// Exact evaluation of a claim-case condition at a binding.
bool cond_holds(const std::string& cond, const ParamEnv& env);

std::string binding_str(const ParamEnv& env);

}  // namespace nambu

#endif
