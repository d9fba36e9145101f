#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "charval/catalog.hpp"
#include "charval/error.hpp"
#include "charval/group_file.hpp"
#include "charval/json_io.hpp"
#include "charval/symchar.hpp"
#include "charval/verify.hpp"

using namespace charval;

namespace {

struct Options {
  std::string group;
  std::string file;
  bool all = false;
  bool json = false;
  bool optional_tier = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_order = kDefaultOrderBound;
  unsigned jobs = 1;
  std::string theorem = "all";
  std::string property;
  std::string partition;
  std::string cycle_type;
};

EvalOptions eval_options(const Options& o) {
  EvalOptions e;
  e.bound = o.max_order;
  e.table.seed = o.seed;
  return e;
}

Subject load_subject(const Options& o) {
  if (!o.file.empty()) {
    const GroupDescription desc = read_group_file(o.file);
    return evaluate(o.file, PermGroup::from_generators(desc.generators, desc.degree, o.max_order), eval_options(o));
  }
  if (o.group.empty()) throw Error(ErrorCode::InvalidArgument, "a --group or --file selector is required");
  // Family selectors have no entry; registered names keep their metadata.
  if (o.group.find(':') != std::string::npos) {
    return evaluate(o.group, build(o.group, o.max_order), eval_options(o));
  }
  return evaluate(find_entry(o.group), eval_options(o));
}

void print_table(const std::string& name, const CharTable& t) {
  const ClassData& cls = t.classes();
  std::cout << name << ": order " << t.group->order() << ", " << cls.size() << " classes, dixon prime "
            << t.dixon_prime << "\n";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    std::cout << "  class " << i << ": size " << cls.class_sizes[i] << ", order " << cls.element_orders[i] << ", rep "
              << t.group->element(cls.representatives[i]).to_cycle_string() << "\n";
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::cout << "  chi_" << r << " (degree " << t.rows[r].degree << "):";
    for (const auto& v : t.rows[r].values) std::cout << "  " << v.to_string();
    std::cout << "\n";
  }
}

std::string set_string(const std::vector<Cyc>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].to_string();
  return out + "}";
}

template <typename T>
std::string list_string(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + "]";
}

void print_report(const std::string& name, const InvariantReport& r) {
  std::cout << name << "\n"
            << "  order: " << r.order << "\n"
            << "  class_count: " << r.class_count << "\n"
            << "  cv: " << set_string(r.cv) << "\n"
            << "  cd: " << list_string(r.cd) << "\n"
            << "  cdc: " << set_string(r.cdc) << "\n"
            << "  ncv: " << set_string(r.ncv) << "\n"
            << "  per_char_cv_sizes: " << list_string(r.per_char_cv_sizes) << "\n"
            << "  cod: " << list_string(r.cod) << "\n"
            << "  b: " << r.b << "\n"
            << "  dl: " << (r.dl ? std::to_string(*r.dl) : "unsolvable") << "\n"
            << "  is_rational_group: " << (r.is_rational_group ? "true" : "false") << "\n"
            << "  root_of_unity_elements: " << list_string(r.root_of_unity_elements) << "\n"
            << "  abelian: " << (r.flags.abelian ? "true" : "false") << "\n"
            << "  nilpotent: " << (r.flags.nilpotent ? "true" : "false") << "\n"
            << "  extraspecial: " << (r.flags.extraspecial ? "true" : "false") << "\n";
  if (r.flags.frobenius) {
    std::cout << "  frobenius: kernel " << r.flags.frobenius->kernel.size() << ", complement "
              << r.flags.frobenius->complement.size() << "\n";
  } else {
    std::cout << "  frobenius: none\n";
  }
}

std::vector<Verdict> symmetric_block() {
  std::vector<Verdict> out;
  bool ok = true;
  std::string details;
  for (const auto& row : mn_table_rows()) {
    if (row.actual != row.expected) ok = false;
    details += (details.empty() ? "" : "; ") + std::string("chi_(") + row.partition + ")(" + row.cycle_type +
               ") = " + std::to_string(row.actual) +
               (row.corrected ? " [tabulated as (" + row.printed + "), not a partition of " + std::to_string(row.n) + "]" : "");
  }
  out.push_back(make_verdict("S15,S16", "mn_table", true, ok, details));
  const auto mismatches = wedge_oracle_mismatches(20);
  out.push_back(make_verdict("S3..S20", "mn_wedge_oracle", true, mismatches.empty(),
                             mismatches.empty() ? "all cycle types agree" : mismatches.front()));
  return out;
}

int emit_verdicts(const std::vector<Verdict>& verdicts, bool json) {
  bool failed = false;
  for (const auto& v : verdicts) failed = failed || v.status == VerdictStatus::Fail;
  if (json) {
    std::cout << to_json(verdicts).dump(2) << "\n";
  } else {
    for (const auto& v : verdicts) {
      std::cout << std::left << std::setw(8) << to_string(v.status) << std::setw(22) << v.group << std::setw(24)
                << v.theorem << v.details << "\n";
    }
  }
  return failed ? 1 : 0;
}

std::vector<Subject> corpus(const Options& o) {
  unsigned jobs = o.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.jobs;
  return evaluate_all(catalog_entries(o.optional_tier), eval_options(o), jobs);
}

int run_verify(const Options& o) {
  if (!is_known_theorem(o.theorem)) throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + o.theorem + "'");
  std::vector<Verdict> verdicts;
  if (o.all) {
    const auto subjects = corpus(o);
    for (const auto& s : subjects) {
      auto v = run_checks(s, o.theorem, eval_options(o));
      verdicts.insert(verdicts.end(), v.begin(), v.end());
    }
    if (o.theorem == "all") {
      auto scans = scan_assertions(subjects);
      verdicts.insert(verdicts.end(), scans.begin(), scans.end());
      auto sym = symmetric_block();
      verdicts.insert(verdicts.end(), sym.begin(), sym.end());
    }
  } else {
    verdicts = run_checks(load_subject(o), o.theorem, eval_options(o));
  }
  return emit_verdicts(verdicts, o.json);
}

int run_scan(const Options& o) {
  matches(Subject{}, o.property);  // validates the predicate before any work
  const auto subjects = corpus(o);
  const auto names = scan(subjects, o.property);
  if (o.json) {
    Json out;
    out["property"] = o.property;
    out["matches"] = names;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& n : names) std::cout << n << "\n";
  }
  return 0;
}

int run_catalog(const Options& o) {
  const auto entries = catalog_entries(o.optional_tier);
  if (o.json) {
    Json out = Json::array();
    for (const auto* e : entries) {
      Json j;
      j["name"] = e->name;
      j["aliases"] = e->aliases;
      j["order"] = e->expected.order ? Json(*e->expected.order) : Json();
      j["tier"] = e->tier == Tier::Core ? "core" : "optional";
      j["source"] = e->source;
      out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto* e : entries) {
    std::cout << std::left << std::setw(24) << e->name << std::right << std::setw(5)
              << (e->expected.order ? std::to_string(*e->expected.order) : "?") << "  "
              << (e->tier == Tier::Optional ? "[optional] " : "") << e->source << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charval: exact character tables and character-value invariants of small finite groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--seed", o.seed, "seed for eigenspace splitting");
    sub->add_option("--max-order", o.max_order, "largest group order to enumerate")->check(CLI::Range(1, 65535));
  };
  auto add_selector = [&](CLI::App* sub) {
    auto* g = sub->add_option("--group", o.group, "catalog name, alias or family selector such as dihedral:14");
    auto* f = sub->add_option("--file", o.file, "group file: 'degree N' then one generator per line");
    g->excludes(f);
    return std::make_pair(g, f);
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_flag("--optional-tier", o.optional_tier, "include optional catalog entries");
    sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  };

  auto* table = app.add_subcommand("table", "print a character table");
  add_common(table);
  add_selector(table);
  auto* invariants = app.add_subcommand("invariants", "print the invariant report");
  add_common(invariants);
  add_selector(invariants);
  auto* verify = app.add_subcommand("verify", "run theorem and lemma checks");
  add_common(verify);
  auto [vg, vf] = add_selector(verify);
  auto* all = verify->add_flag("--all", o.all, "check every catalog group");
  all->excludes(vg)->excludes(vf);
  verify->add_option("--theorem", o.theorem, "A, B, C, D, E, lemma_2_6, lemmas, theorems or all");
  add_corpus(verify);
  auto* scan_cmd = app.add_subcommand("scan", "list catalog groups satisfying a predicate");
  add_common(scan_cmd);
  add_corpus(scan_cmd);
  scan_cmd->add_option("--property", o.property, "cdc=k, ncv=k, ncv<=k, all-rows<=k or rational")->required();
  auto* mn = app.add_subcommand("mn", "symmetric group character value by Murnaghan-Nakayama");
  mn->add_option("--partition", o.partition, "e.g. 13,1,1")->required();
  mn->add_option("--cycle-type", o.cycle_type, "e.g. 9,4,2")->required();
  auto* cat = app.add_subcommand("catalog", "catalog operations");
  auto* list = cat->add_subcommand("list", "list registered groups");
  list->add_flag("--json", o.json, "JSON output");
  list->add_flag("--optional-tier", o.optional_tier, "include optional entries");
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table || *invariants) {
      const Subject s = load_subject(o);
      if (*table) {
        if (o.json) {
          std::cout << to_json(s.name, s.table).dump(2) << "\n";
        } else {
          print_table(s.name, s.table);
        }
      } else if (o.json) {
        Json out;
        out["group"] = s.name;
        out["report"] = to_json(s.report);
        std::cout << out.dump(2) << "\n";
      } else {
        print_report(s.name, s.report);
      }
      return 0;
    }
    if (*verify) {
      if (!o.all && o.group.empty() && o.file.empty()) {
        throw Error(ErrorCode::InvalidArgument, "verify needs --group, --file or --all");
      }
      return run_verify(o);
    }
    if (*scan_cmd) return run_scan(o);
    if (*mn) {
      std::cout << mn_value(Partition::parse(o.partition), CycleType::parse(o.cycle_type)).get_str() << "\n";
      return 0;
    }
    if (*list) return run_catalog(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
