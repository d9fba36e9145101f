// Acceptance suite: one PASS/FAIL line per criterion, then the optional tier.
// Usage: acceptance [path-to-charval-binary]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charval/catalog.hpp"
#include "charval/json_io.hpp"
#include "charval/symchar.hpp"
#include "charval/verify.hpp"
#include "oracles.hpp"

using namespace charval;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

// Value sets straight from the rows.
std::set<std::string> all_values(const CharTable& t) {
  std::set<std::string> out;
  for (const auto& row : t.rows) {
    for (const auto& v : row.values) out.insert(v.to_string());
  }
  return out;
}

std::set<std::string> row_values(const CharTable& t, std::size_t i) {
  std::set<std::string> out;
  for (const auto& v : t.rows[i].values) out.insert(v.to_string());
  return out;
}

std::set<long> degrees(const CharTable& t) {
  std::set<long> out;
  for (const auto& row : t.rows) out.insert(row.degree);
  return out;
}

std::set<std::string> cdc(const CharTable& t) {
  auto out = all_values(t);
  for (long d : degrees(t)) out.erase(std::to_string(d));
  return out;
}

std::set<std::string> ncv(const CharTable& t) {
  std::set<std::string> out;
  for (const auto& s : all_values(t)) {
    const bool positive_integer = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos && s != "0";
    if (!positive_integer) out.insert(s);
  }
  return out;
}

std::string show(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? ", " : "") + v;
  return out + "}";
}

std::set<std::string> strings(std::initializer_list<const char*> values) { return {values.begin(), values.end()}; }

bool exactness(const CharTable& t, std::string& why) {
  long sum_sq = 0;
  for (const auto& row : t.rows) sum_sq += row.degree * row.degree;
  if (sum_sq != static_cast<long>(t.group->order())) {
    why = "sum of squared degrees " + std::to_string(sum_sq);
    return false;
  }
  if (t.rows.size() != oracle::class_count(*t.group)) {
    why = "row count differs from brute-force class count";
    return false;
  }
  if (!oracle::first_orthogonality(t)) {
    why = "first orthogonality";
    return false;
  }
  if (!oracle::second_orthogonality(t)) {
    why = "second orthogonality or centralizer orders";
    return false;
  }
  return true;
}

std::map<std::string, CharTable> tables;

const CharTable& table_of(const std::string& name) {
  auto it = tables.find(name);
  if (it == tables.end()) it = tables.emplace(name, character_table(build(name))).first;
  return it->second;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

std::string verdict_json(unsigned jobs) {
  EvalOptions opts;
  const auto subjects = evaluate_all(catalog_entries(false), opts, jobs);
  std::vector<Verdict> verdicts;
  for (const auto& s : subjects) {
    auto v = run_checks(s, "all", opts);
    verdicts.insert(verdicts.end(), v.begin(), v.end());
  }
  auto scans = scan_assertions(subjects);
  verdicts.insert(verdicts.end(), scans.begin(), scans.end());
  return to_json(verdicts).dump(2);
}

Outcome criterion1() {
  Outcome o;
  for (const auto* e : catalog_entries(false)) {
    std::string why;
    if (!exactness(table_of(e->name), why)) o.fail(e->name + ": " + why);
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto pin = [&](const char* name, std::set<std::string> expected) {
    const auto got = all_values(table_of(name));
    o.expect(got == expected, std::string("cv(") + name + ") = " + show(got));
  };
  pin("frob_3k_2_1", strings({"1", "-1", "0", "2"}));
  pin("S4", strings({"1", "2", "3", "0", "-1"}));
  pin("D8", strings({"1", "2", "0", "-1", "-2"}));
  pin("Q8", strings({"1", "2", "0", "-1", "-2"}));
  for (const char* name : {"C2", "C2^2", "C2^3"}) {
    o.expect(cdc(table_of(name)).size() == 1, std::string("|cdc(") + name + ")| != 1");
  }
  std::vector<std::string> two;
  for (const auto* e : catalog_entries(false)) {
    const CharTable& t = table_of(e->name);
    if (cdc(t).size() == 2 && degrees(t).size() > 1) two.push_back(e->name);
  }
  const std::vector<std::string> expected{"frob_3k_2_1", "frob_3k_2_2", "frob_3k_2_3", "S4"};
  std::string got;
  for (const auto& n : two) got += n + " ";
  o.expect(two == expected, "nonabelian |cdc| = 2: " + got);
  return o;
}

Outcome criterion3() {
  Outcome o;
  // (partition, cycle type, value) as tabulated for n = 15, 16
  struct Row {
    const char* partition;
    const char* cycle_type;
    long value;
  };
  const std::vector<Row> rows{
      {"13,1,1", "9,4,2", 0},      {"13,1,1", "11,2,2", -1},      {"13,1,1", "5,4,2,2,2", -2},
      {"13,1,1", "7,2,2,2,2", -3}, {"14,1,1", "14,2", 0},         {"14,1,1", "8,4,2,2", -1},
      {"14,1,1", "10,2,2,2", -2},  {"14,1,1", "4,4,2,2,2,2", -3},
  };
  const auto table = mn_table_rows();
  o.expect(table.size() == rows.size(), "table row count " + std::to_string(table.size()));
  for (const auto& r : rows) {
    const long got = mn_value(Partition::parse(r.partition), CycleType::parse(r.cycle_type)).get_si();
    o.expect(got == r.value, std::string("chi_(") + r.partition + ")(" + r.cycle_type + ") = " + std::to_string(got));
  }
  for (const auto& r : table) o.expect(r.actual == r.expected, "tabulated row " + r.cycle_type);
  const auto mismatches = wedge_oracle_mismatches(20);
  if (!mismatches.empty()) o.fail("wedge oracle: " + mismatches.front());
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"dih_10", "sg_136_12", "sg_50_4", "sg_21_1", "He3", "sg_27_4", "sg_36_9", "sg_55_1",
                           "sg_78_1", "sg_80_49", "sg_81_3", "sg_81_4", "sg_81_12", "sg_81_13", "sg_147_4"}) {
    const CharTable& t = table_of(name);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i].degree > 1 && row_values(t, i).size() != 4) {
        o.fail(std::string(name) + " row " + std::to_string(i) + " takes " + std::to_string(row_values(t, i).size()) +
               " values");
        break;
      }
    }
  }
  const CharTable& s4 = table_of("S4");
  for (std::size_t i = 0; i < s4.rows.size(); ++i) o.expect(row_values(s4, i).size() <= 4, "S4 row with > 4 values");
  return o;
}

Outcome criterion5(double& a6_seconds) {
  Outcome o;
  const CharTable& a5 = table_of("A5");
  bool five = false;
  bool irrational = false;
  for (std::size_t i = 0; i < a5.rows.size(); ++i) five = five || row_values(a5, i).size() == 5;
  for (const auto& row : a5.rows) {
    for (const auto& v : row.values) irrational = irrational || !v.is_rational();
  }
  o.expect(five, "A5 has no row with exactly 5 values");
  o.expect(irrational, "A5 table is rational");
  const auto s5 = ncv(table_of("S5"));
  o.expect(s5.size() == 3, "ncv(S5) = " + show(s5));
  const auto start = Clock::now();
  const CharTable a6 = character_table(build("A6"));
  std::string why;
  o.expect(exactness(a6, why), "A6: " + why);
  a6_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(a6_seconds < 10.0, "A6 took too long");
  o.expect(a6.rows.size() == 7, "A6 class count");
  return o;
}

Outcome criterion6(const std::vector<Subject>& subjects) {
  Outcome o;
  std::map<std::string, std::size_t> passes;
  for (const auto& s : subjects) {
    for (const auto& v : check_lemmas(s)) {
      if (v.status == VerdictStatus::Fail) o.fail(v.group + " " + v.theorem + ": " + v.details);
      if (v.status == VerdictStatus::Pass) ++passes[v.theorem];
    }
  }
  for (const char* id : {"lemma_2_1a", "lemma_2_1c", "lemma_2_1d", "lemma_2_1e", "lemma_2_1f", "lemma_2_2b",
                         "lemma_2_2c", "lemma_2_3", "lemma_2_4a", "lemma_2_4b", "lemma_2_4c", "lemma_2_5",
                         "lemma_2_6"}) {
    o.expect(passes[id] > 0, std::string(id) + " never applies");
  }
  for (int t : {5, 7, 9, 11}) {
    const auto n = ncv(character_table(families::dihedral(2 * t))).size();
    o.expect(n > 3, "|ncv(Dih(" + std::to_string(2 * t) + "))| = " + std::to_string(n));
  }
  return o;
}

Outcome criterion7(const std::vector<Subject>& subjects) {
  Outcome o;
  std::set<std::string> nilpotent_nonabelian;
  for (const auto& s : subjects) {
    for (const auto& v : {check_A(s), check_C(s), check_D(s), check_E(s)}) {
      if (v.status == VerdictStatus::Fail) o.fail(v.group + " " + v.theorem + ": " + v.details);
    }
    if (!s.report.flags.nilpotent || s.report.flags.abelian) continue;
    nilpotent_nonabelian.insert(s.name);
    const CharTable& t = s.table;
    const auto& cls = t.classes();
    const auto ds = degrees(t);
    const std::size_t order = t.group->order();
    const bool pa = cdc(t).size() == 3;
    bool pb = ds.size() == 2;
    for (std::size_t i = 0; i < t.rows.size(); ++i) pb = pb && row_values(t, i).size() <= 3;
    bool pc = ds.size() == 2 && (order & (order - 1)) == 0;
    for (const auto& row : t.rows) {
      if (!pc || row.degree == 1) continue;
      std::size_t kernel = 0;
      for (std::size_t c = 0; c < cls.size(); ++c) {
        if (row.values[c] == Cyc(row.degree)) kernel += cls.class_sizes[c];
      }
      pc = static_cast<long>(order / kernel) == 2 * row.degree * row.degree;
    }
    o.expect(pa == pb && pb == pc, s.name + ": predicates disagree");
  }
  for (const char* name : {"D8", "Q8", "D8xC2", "D8xC2^2", "Q8xC2"}) {
    o.expect(nilpotent_nonabelian.count(name) == 1, std::string(name) + " missing from the nilpotent entries");
  }
  return o;
}

Outcome criterion8(const std::string& cli) {
  Outcome o;
  const std::string a = verdict_json(1);
  const std::string b = verdict_json(4);
  o.expect(a == b, "in-process JSON differs between runs");
  if (!cli.empty()) {
    int s1 = 0;
    int s2 = 0;
    const std::string r1 = run_command("'" + cli + "' verify --all --json --seed 7 --jobs 1", s1);
    const std::string r2 = run_command("'" + cli + "' verify --all --json --seed 7 --jobs 0", s2);
    o.expect(s1 == 0 && s2 == 0, "verify --all exited nonzero");
    o.expect(!r1.empty() && r1 == r2, "CLI JSON differs between runs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool all_ok = true;
  const auto report_line = [&](int id, const char* title, const Outcome& o, double seconds, double limit) {
    const bool ok = o.ok && (limit <= 0 || seconds < limit);
    all_ok = all_ok && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << std::fixed;
    line.precision(2);
    line << seconds << " s";
    if (limit > 0) line << ", limit " << limit << " s";
    line << ")";
    std::cout << line.str() << "\n";
    for (std::size_t i = 0; i < o.notes.size() && i < 10; ++i) std::cout << "      " << o.notes[i] << "\n";
  };
  const auto timed = [&](int id, const char* title, double limit, const std::function<Outcome()>& f) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    report_line(id, title, o, std::chrono::duration<double>(Clock::now() - start).count(), limit);
  };

  timed(1, "exact orthogonality, degree sum and centralizer orders on every core group", 120, criterion1);
  timed(2, "stated value sets and the |cdc| = 2 groups", 0, criterion2);
  timed(3, "symmetric group table rows and exterior-square oracle, n <= 20", 5, criterion3);
  timed(4, "four-value examples and S4", 0, criterion4);
  double a6 = 0;
  timed(5, "A5, S5 and A6 spot checks", 0, [&] { return criterion5(a6); });
  std::cout << "      A6 table in " << a6 << " s (limit 10 s)\n";

  std::vector<Subject> subjects;
  try {
    subjects = evaluate_all(catalog_entries(false), {}, 1);
  } catch (const std::exception& e) {
    std::cout << "error evaluating catalog: " << e.what() << "\n";
    return 1;
  }
  timed(6, "lemma properties over the catalog and the dihedral scan", 0, [&] { return criterion6(subjects); });
  timed(7, "theorem checkers and the nilpotent equivalence", 0, [&] { return criterion7(subjects); });
  timed(8, "byte-identical verify --all JSON", 0, [&] { return criterion8(cli); });

  std::cout << "optional tier (reported, not counted):\n";
  for (const auto* e : catalog_entries(true)) {
    if (e->tier != Tier::Optional) continue;
    try {
      const CharTable t = character_table(build(e->name));
      std::string why;
      const bool exact = exactness(t, why);
      const auto failures = check_expected(*e, t, report(t));
      std::cout << (exact && failures.empty() ? "  PASS  " : "  FAIL  ") << e->name;
      if (!exact) std::cout << "  [" << why << "]";
      for (const auto& f : failures) std::cout << "  [" << f << "]";
      std::cout << "\n";
    } catch (const std::exception& ex) {
      std::cout << "  FAIL  " << e->name << "  [" << ex.what() << "]\n";
    }
  }
  std::cout << (all_ok ? "all criteria passed" : "some criteria failed") << "\n";
  return all_ok ? 0 : 1;
}
