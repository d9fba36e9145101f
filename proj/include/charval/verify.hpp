#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "charval/catalog.hpp"
#include "charval/char_table.hpp"
#include "charval/invariants.hpp"
#include "charval/symchar.hpp"

namespace charval {

enum class VerdictStatus { Pass, Vacuous, Fail };

std::string to_string(VerdictStatus status);

struct Verdict {
  std::string group;
  std::string theorem;
  bool hypothesis_met = false;
  bool conclusion_holds = false;
  std::string details;
  VerdictStatus status = VerdictStatus::Vacuous;
};

Verdict make_verdict(std::string group, std::string theorem, bool hypothesis_met, bool conclusion_holds,
                     std::string details);

// One group with its table and invariants, plus catalog metadata when it came from the registry.
struct Subject {
  std::string name;
  const CatalogEntry* entry = nullptr;
  std::shared_ptr<const PermGroup> group;
  CharTable table;
  InvariantReport report;
};

struct EvalOptions {
  std::size_t bound = kDefaultOrderBound;
  TableOptions table;
};

Subject evaluate(std::string name, PermGroup group, const EvalOptions& options = {});
Subject evaluate(const CatalogEntry& entry, const EvalOptions& options = {});

Verdict check_A(const Subject& s);
Verdict check_B(const Subject& s);
Verdict check_C(const Subject& s);
Verdict check_D(const Subject& s);
Verdict check_E(const Subject& s);
Verdict check_lemma_2_6(const Subject& s);

// Lemma property checks; one verdict per property, vacuous where it does not apply.
std::vector<Verdict> check_lemmas(const Subject& s, const EvalOptions& options = {});

// "A", "B", "C", "D", "E", "lemma_2_6", "lemmas", "theorems" or "all".
std::vector<Verdict> run_checks(const Subject& s, std::string_view theorem, const EvalOptions& options = {});
bool is_known_theorem(std::string_view theorem);

// Evaluates catalog entries on up to `jobs` threads; output is in catalog order.
std::vector<Subject> evaluate_all(const std::vector<const CatalogEntry*>& entries, const EvalOptions& options,
                                  unsigned jobs);

// Predicates: "cdc=k", "ncv=k", "ncv<=k", "all-rows<=k", "rational" ("≤" also accepted).
// Throws InvalidArgument on anything else.
bool matches(const Subject& s, std::string_view predicate);
std::vector<std::string> scan(const std::vector<Subject>& subjects, std::string_view predicate);

// Corpus-wide assertions on a set of subjects.
std::vector<Verdict> scan_assertions(const std::vector<Subject>& subjects);

struct MnRow {
  int n = 0;
  std::string partition;
  std::string cycle_type;  // the cycle type evaluated
  std::string printed;     // the cycle type as tabulated
  bool corrected = false;  // printed type does not sum to n
  long expected = 0;
  long actual = 0;
};

// Tabulated values of chi_(n-2,1,1) on even classes for n = 15 and 16.
std::vector<MnRow> mn_table_rows();
// Exterior-square oracle for (n-2,1,1) over every cycle type of n; returns mismatches.
std::vector<std::string> wedge_oracle_mismatches(int max_n);
long wedge_value(const CycleType& rho);

}  // namespace charval
