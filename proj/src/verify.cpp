#include "charval/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "charval/error.hpp"
#include "charval/symchar.hpp"

namespace charval {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Vacuous: return "vacuous";
    case VerdictStatus::Fail: return "FAIL";
  }
  return "?";
}

Verdict make_verdict(std::string group, std::string theorem, bool hypothesis_met, bool conclusion_holds,
                     std::string details) {
  Verdict v;
  v.group = std::move(group);
  v.theorem = std::move(theorem);
  v.hypothesis_met = hypothesis_met;
  v.conclusion_holds = hypothesis_met && conclusion_holds;
  v.details = std::move(details);
  if (!hypothesis_met) {
    v.status = VerdictStatus::Vacuous;
  } else {
    v.status = conclusion_holds ? VerdictStatus::Pass : VerdictStatus::Fail;
  }
  return v;
}

Subject evaluate(std::string name, PermGroup group, const EvalOptions& options) {
  Subject s;
  s.name = std::move(name);
  s.group = std::make_shared<const PermGroup>(std::move(group));
  s.table = character_table(s.group, options.table);
  s.report = report(s.table);
  return s;
}

Subject evaluate(const CatalogEntry& entry, const EvalOptions& options) {
  Subject s = evaluate(entry.name, build(entry.name, options.bound), options);
  s.entry = &entry;
  return s;
}

namespace {

std::string join_values(const std::vector<Cyc>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].to_string();
  return out + "}";
}

std::string join_longs(const std::vector<long>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + "}";
}

bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool all_orders_divide(const PermGroup& g, const ElementSet& set, int e) {
  return std::all_of(set.begin(), set.end(), [&](int x) { return e % g.element_order(x) == 0; });
}

bool is_elementary_abelian_3(const PermGroup& g, const ElementSet& set) {
  return set.size() > 1 && is_power_of(set.size(), 3) && is_abelian(g, set) && all_orders_divide(g, set, 3);
}

std::size_t max_nonlinear_row_values(const Subject& s) {
  std::size_t most = 0;
  for (std::size_t r = 0; r < s.table.rows.size(); ++r) {
    if (s.table.rows[r].degree > 1) most = std::max(most, s.report.per_char_cv_sizes[r]);
  }
  return most;
}

// A small generating set of a subgroup, chosen greedily.
PermGroup subgroup_as_group(const PermGroup& g, const ElementSet& set) {
  std::vector<int> gens;
  ElementSet current{0};
  for (int x : set) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generate_subgroup(g, gens);
    if (current.size() == set.size()) break;
  }
  std::vector<Permutation> perms;
  for (int x : gens) perms.push_back(g.element(x));
  return PermGroup::from_generators(std::move(perms), g.degree(), std::max(set.size(), kDefaultOrderBound));
}

ElementSet sylow_subgroup(const PermGroup& g, int p) {
  std::size_t target = 1;
  std::size_t n = g.order();
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    target *= static_cast<std::size_t>(p);
  }
  ElementSet h{0};
  while (h.size() < target) {
    bool grown = false;
    for (int x = 0; x < static_cast<int>(g.order()) && !grown; ++x) {
      if (!is_power_of(static_cast<std::size_t>(g.element_order(x)), static_cast<std::size_t>(p))) continue;
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      const bool normalizes = std::all_of(h.begin(), h.end(), [&](int y) {
        return std::binary_search(h.begin(), h.end(), g.conjugate(y, x));
      });
      if (!normalizes) continue;
      std::vector<int> gens(h.begin(), h.end());
      gens.push_back(x);
      ElementSet k = generate_subgroup(g, gens);
      if (is_power_of(k.size(), static_cast<std::size_t>(p))) {
        h = std::move(k);
        grown = true;
      }
    }
    if (!grown) break;
  }
  return h;
}

struct ValueSets {
  std::vector<Cyc> cv;
  std::vector<Cyc> ncv;
};

ValueSets value_sets(const CharTable& t) {
  ValueSets out;
  for (const auto& row : t.rows) {
    for (const auto& v : row.values) {
      out.cv.push_back(v);
      if (!classify(v).is_positive_natural) out.ncv.push_back(v);
    }
  }
  out.cv = canonical_value_set(std::move(out.cv));
  out.ncv = canonical_value_set(std::move(out.ncv));
  return out;
}

bool is_root_of_unity(const Cyc& x) {
  const int n = x.conductor();
  long m = n % 2 == 0 ? n : 2L * n;
  Cyc result(1);
  Cyc base = x;
  while (m > 0) {
    if (m & 1) result = result * base;
    base = base * base;
    m >>= 1;
  }
  return result == Cyc(1);
}

bool case_a_shape(const Subject& s) {
  const auto& f = s.report.flags.frobenius;
  return s.report.cd == std::vector<long>{1, 2} && f && f->complement.size() == 2 &&
         is_elementary_abelian_3(*s.group, f->kernel);
}

bool s4_fingerprint(const Subject& s) {
  if (s.report.order != 24 || !s.report.dl || *s.report.dl != 3) return false;
  auto sizes = s.table.classes().class_sizes;
  std::sort(sizes.begin(), sizes.end());
  std::vector<long> degrees;
  for (const auto& row : s.table.rows) degrees.push_back(row.degree);
  std::sort(degrees.begin(), degrees.end());
  return sizes == std::vector<std::size_t>{1, 3, 6, 6, 8} && degrees == std::vector<long>{1, 1, 2, 3, 3};
}

// G has O_2 central elementary abelian and an abelian normal subgroup of index 2
// whose odd part is elementary abelian of exponent 3.
struct EShape {
  bool o2_abelian = false;
  bool index2_abelian = false;
  bool o2_central_elementary = false;
  std::size_t o2_order = 1;
};

EShape e_shape(const PermGroup& g) {
  EShape out;
  const auto normals = normal_subgroups(g);
  ElementSet o2{0};
  for (const auto& n : normals) {
    if (is_power_of(n.size(), 2) && n.size() > o2.size()) o2 = n;
  }
  out.o2_order = o2.size();
  out.o2_abelian = is_abelian(g, o2);
  const ElementSet z = center(g);
  out.o2_central_elementary = std::includes(z.begin(), z.end(), o2.begin(), o2.end()) && all_orders_divide(g, o2, 2);
  for (const auto& n : normals) {
    if (n.size() * 2 != g.order() || !is_abelian(g, n)) continue;
    ElementSet odd;
    for (int x : n) {
      if (g.element_order(x) % 2 == 1) odd.push_back(x);
    }
    if (all_orders_divide(g, odd, 3)) {
      out.index2_abelian = true;
      break;
    }
  }
  return out;
}

}  // namespace

Verdict check_A(const Subject& s) {
  const std::size_t most = max_nonlinear_row_values(s);
  const bool hyp = most <= 4;
  std::string details = "largest nonlinear row value count " + std::to_string(most) + "; " +
                        (s.report.dl ? "solvable, dl " + std::to_string(*s.report.dl) : "not solvable");
  return make_verdict(s.name, "A", hyp, s.report.dl.has_value(), details);
}

Verdict check_B(const Subject& s) {
  const bool excluded = s.entry && s.entry->excluded_composition_factor;
  const bool hyp = !excluded && s.report.cdc.size() <= 3;
  std::string details = "|cdc| = " + std::to_string(s.report.cdc.size()) +
                        (excluded ? "; has an A5 or A6 composition factor" : "") + "; " +
                        (s.report.dl ? "solvable" : "not solvable");
  return make_verdict(s.name, "B", hyp, s.report.dl.has_value(), details);
}

Verdict check_C(const Subject& s) {
  const auto& r = s.report;
  // Abelian C3^k also has |cdc| = 2; the statement concerns nonabelian groups.
  const bool hyp = !r.flags.abelian && (r.cd.size() <= 4 || (r.dl && *r.dl <= 3));
  const bool cdc2 = r.cdc.size() == 2;
  const bool a = case_a_shape(s);
  const bool b = s4_fingerprint(s);
  std::string details = "|cdc| = " + std::to_string(r.cdc.size()) + ", cd = " + join_longs(r.cd);
  if (a) details += "; case (a) shape";
  if (b) details += "; S4 fingerprint";
  return make_verdict(s.name, "C", hyp, cdc2 == (a || b), details);
}

Verdict check_D(const Subject& s) {
  const auto& r = s.report;
  const bool hyp = r.flags.nilpotent && !r.flags.abelian;
  if (!hyp) return make_verdict(s.name, "D", false, false, "not nilpotent nonabelian");
  const bool pa = r.cdc.size() == 3;
  const bool pb = r.cd.size() == 2 && std::all_of(r.per_char_cv_sizes.begin(), r.per_char_cv_sizes.end(),
                                                   [](std::size_t n) { return n <= 3; });
  bool pc = r.cd.size() == 2 && is_power_of(r.order, 2);
  for (std::size_t i = 0; pc && i < s.table.rows.size(); ++i) {
    if (s.table.rows[i].degree > 1 && r.cod[i] != 2 * s.table.rows[i].degree) pc = false;
  }
  std::string details = std::string("(a) ") + (pa ? "true" : "false") + ", (b) " + (pb ? "true" : "false") +
                        ", (c) " + (pc ? "true" : "false");
  bool holds = pa == pb && pb == pc;
  if (holds && pa) {
    bool found = false;
    for (const auto& n : normal_subgroups(*s.group)) {
      const PermGroup q = quotient_group(*s.group, n);
      if (is_power_of(q.order(), 2) && is_extraspecial(q)) {
        details += "; G/N extraspecial of order " + std::to_string(q.order()) + " with |N| = " + std::to_string(n.size());
        found = true;
        break;
      }
    }
    if (!found) details += "; no extraspecial quotient";
    holds = found;
  }
  return make_verdict(s.name, "D", true, holds, details);
}

Verdict check_E(const Subject& s) {
  const auto& r = s.report;
  if (r.flags.nilpotent) return make_verdict(s.name, "E", false, false, "nilpotent");
  const bool hyp = r.cdc.size() == 3 && r.dl && *r.dl == 2;
  if (!hyp) {
    return make_verdict(s.name, "E", false, false,
                        "|cdc| = " + std::to_string(r.cdc.size()) + ", dl " + (r.dl ? std::to_string(*r.dl) : "none"));
  }
  const PermGroup& g = *s.group;
  const EShape shape = e_shape(g);
  bool holds = shape.o2_abelian && shape.index2_abelian;
  std::string details = "|O_2| = " + std::to_string(shape.o2_order) + (shape.o2_abelian ? " abelian" : " nonabelian") +
                        (shape.index2_abelian ? "; abelian index-2 normal subgroup with elementary 3-part"
                                              : "; no abelian index-2 normal subgroup of the required form");
  const ElementSet p = sylow_subgroup(g, 2);
  if (is_abelian(g, p)) {
    details += "; Sylow 2-subgroup abelian, O_2 ";
    details += shape.o2_central_elementary ? "central elementary abelian" : "not central elementary abelian";
    holds = holds && shape.o2_central_elementary;
  } else {
    const PermGroup pg = subgroup_as_group(g, p);
    const auto pcv = value_sets(character_table(pg)).cv;
    const ElementSet pd = commutator_subgroup(g, p);
    bool moreover = pcv.size() == 5 && is_normal(g, pd);
    if (moreover) {
      const EShape qs = e_shape(quotient_group(g, pd));
      moreover = qs.o2_central_elementary && qs.index2_abelian;
    }
    details += "; Sylow 2-subgroup nonabelian with |cv(P)| = " + std::to_string(pcv.size());
    holds = holds && moreover;
  }
  return make_verdict(s.name, "E", true, holds, details);
}

Verdict check_lemma_2_6(const Subject& s) {
  const auto& cd = s.report.cd;
  if (cd.size() != 2) return make_verdict(s.name, "lemma_2_6", false, false, "cd = " + join_longs(cd));
  const long m = cd[1];
  const PermGroup& g = *s.group;
  for (const auto& n : normal_subgroups(g)) {
    if (static_cast<long>(g.order() / n.size()) == m && is_abelian(g, n)) {
      return make_verdict(s.name, "lemma_2_6", true, true,
                          "abelian normal subgroup of index " + std::to_string(m));
    }
  }
  const auto p = prime_power_base(m);
  bool product = false;
  if (p && s.report.flags.nilpotent) {
    product = true;
    for (const auto& [q, oq] : s.report.flags.o_p) {
      if (q != *p && !is_abelian(g, oq)) product = false;
    }
  }
  return make_verdict(s.name, "lemma_2_6", true, product,
                      product ? "m = " + std::to_string(m) + " is a prime power and G = P x abelian"
                              : "no abelian normal subgroup of index " + std::to_string(m));
}

std::vector<Verdict> check_lemmas(const Subject& s, const EvalOptions& options) {
  std::vector<Verdict> out;
  const PermGroup& g = *s.group;
  const CharTable& t = s.table;
  const auto& r = s.report;
  const auto& cls = t.classes();
  const std::size_t k = cls.size();

  {  // quotients never enlarge cv or ncv
    bool ok = true;
    std::size_t checked = 0;
    std::string details;
    for (const auto& n : normal_subgroups(g)) {
      if (n.size() == 1) continue;
      const ValueSets q = value_sets(character_table(quotient_group(g, n, options.bound), options.table));
      ++checked;
      if (q.cv.size() > r.cv.size() || q.ncv.size() > r.ncv.size()) {
        ok = false;
        details = "quotient by a normal subgroup of order " + std::to_string(n.size()) + " has larger value sets";
      }
    }
    if (ok) details = std::to_string(checked) + " proper quotients checked";
    out.push_back(make_verdict(s.name, "lemma_2_1a", true, ok, details));
  }
  {
    const bool cyclic = is_cyclic(g, whole_group(g));
    bool ok = r.cv.size() == g.order();
    bool column = false;
    for (std::size_t c = 0; c < k && !column; ++c) {
      std::vector<Cyc> col;
      for (const auto& row : t.rows) col.push_back(row.values[c]);
      column = canonical_value_set(col).size() == col.size();
    }
    out.push_back(make_verdict(s.name, "lemma_2_1b", cyclic, ok && column,
                               cyclic ? "|cv| = " + std::to_string(r.cv.size()) : "not cyclic"));
  }
  {
    const bool nonabelian = !r.flags.abelian;
    out.push_back(make_verdict(s.name, "lemma_2_1c", nonabelian, contains(r.ncv, Cyc(0)),
                               nonabelian ? "ncv = " + join_values(r.ncv) : "abelian"));
  }
  {
    bool ok = true;
    std::size_t rational_rows = 0;
    for (const auto& row : t.rows) {
      if (std::all_of(row.values.begin(), row.values.end(), [](const Cyc& v) { return v == Cyc(1); })) continue;
      if (!std::all_of(row.values.begin(), row.values.end(), [](const Cyc& v) { return v.is_rational(); })) continue;
      ++rational_rows;
      if (std::none_of(row.values.begin(), row.values.end(), [](const Cyc& v) { return v.rational() < 0; })) ok = false;
    }
    out.push_back(make_verdict(s.name, "lemma_2_1d", rational_rows > 0, ok,
                               std::to_string(rational_rows) + " nonprincipal rational rows"));
  }
  if (s.entry && s.entry->factors) {
    const auto& [hname, kname] = *s.entry->factors;
    const auto hcv = value_sets(character_table(build(hname, options.bound), options.table)).cv;
    const auto kcv = value_sets(character_table(build(kname, options.bound), options.table)).cv;
    bool ok = true;
    for (const auto& a : hcv) {
      for (const auto& b : kcv) {
        if (!contains(r.cv, a) || !contains(r.cv, b) || !contains(r.cv, a * b)) ok = false;
      }
    }
    out.push_back(make_verdict(s.name, "lemma_2_1e", true, ok, hname + " x " + kname));
  } else {
    out.push_back(make_verdict(s.name, "lemma_2_1e", false, false, "not registered as a direct product"));
  }
  {
    bool ok = true;
    bool any = false;
    for (const auto& row : t.rows) {
      for (const auto& v : row.values) {
        if (v.is_rational()) continue;
        any = true;
        const bool partner = std::any_of(row.values.begin(), row.values.end(),
                                         [&](const Cyc& w) { return !w.is_rational() && !(w == v); });
        if (!partner) ok = false;
      }
    }
    out.push_back(make_verdict(s.name, "lemma_2_1f", any, ok, any ? "irrational values paired" : "rational table"));
  }
  {  // Z(chi)/ker chi = Z(G/ker chi), cyclic
    bool ok = true;
    std::string details = "all rows";
    std::map<ElementSet, std::pair<std::size_t, bool>> quotient_centres;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const ElementSet ker = kernel_elements(t, i);
      const ElementSet z = center_elements(t, i);
      for (int x : z) {
        for (int gen : g.generator_indices()) {
          if (!std::binary_search(ker.begin(), ker.end(), g.commutator(x, gen))) ok = false;
        }
      }
      auto it = quotient_centres.find(ker);
      if (it == quotient_centres.end()) {
        const PermGroup q = quotient_group(g, ker, options.bound);
        const ElementSet zq = center(q);
        it = quotient_centres.emplace(ker, std::make_pair(zq.size(), is_cyclic(q, zq))).first;
      }
      if (z.size() / ker.size() != it->second.first || !it->second.second) {
        ok = false;
        details = "row " + std::to_string(i) + " fails";
      }
    }
    out.push_back(make_verdict(s.name, "lemma_2_2b", true, ok, details));
  }
  {
    bool ok = true;
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < k; ++c) {
        if (!(row.values[static_cast<std::size_t>(cls.inverse_class[c])] == conjugate(row.values[c]))) ok = false;
      }
    }
    out.push_back(make_verdict(s.name, "lemma_2_2c", true, ok, "chi(g^-1) = conj(chi(g))"));
  }
  {  // p-element divisibility
    bool ok = true;
    std::size_t checked = 0;
    std::string details;
    for (std::size_t c = 1; c < k; ++c) {
      const int order = cls.element_orders[c];
      const auto p = prime_power_base(order);
      if (!p) continue;
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const long d = t.rows[i].degree;
        const Cyc& v = t.rows[i].values[c];
        const Cyc a = classify(v).abs_squared;
        if (!a.is_rational()) continue;
        ++checked;
        const mpq_class diff = mpq_class(d * d) - a.rational();
        bool good = diff.get_den() == 1 && mpz_class(diff.get_num() % *p) == 0;
        if (v.is_zero() && d % *p != 0) good = false;
        if (a.rational() == 1 && std::gcd(d, static_cast<long>(order)) != 1) good = false;
        if (!good) {
          ok = false;
          details = "row " + std::to_string(i) + " class " + std::to_string(c);
        }
      }
    }
    if (ok) details = std::to_string(checked) + " (row, p-element class) pairs";
    out.push_back(make_verdict(s.name, "lemma_2_3", checked > 0, ok, details));
  }
  {
    const bool nilpotent_nonabelian = r.flags.nilpotent && !r.flags.abelian;
    bool a_ok = true;
    bool c_ok = true;
    if (nilpotent_nonabelian) {
      for (const auto& row : t.rows) {
        if (row.degree == 1) continue;
        const Cyc inv_d(mpq_class(1, row.degree));
        bool found = false;
        for (const auto& v : row.values) {
          if (v == Cyc(row.degree)) continue;
          const Cyc eps = v * inv_d;
          if (is_root_of_unity(eps) && contains(r.ncv, v) && contains(r.ncv, conjugate(v))) found = true;
        }
        if (!found) a_ok = false;
        if (r.flags.p_group_prime) {
          for (const auto& v : row.values) {
            if (classify(v).abs_squared == Cyc(1)) c_ok = false;
          }
        }
      }
    }
    out.push_back(make_verdict(s.name, "lemma_2_4a", nilpotent_nonabelian, a_ok,
                               nilpotent_nonabelian ? "each nonlinear row has chi(1) eps and its conjugate" : "vacuous"));
    bool b_ok = r.ncv.size() >= 3;
    std::string b_details = "|ncv| = " + std::to_string(r.ncv.size());
    if (nilpotent_nonabelian && !is_power_of(r.order, 2)) b_ok = b_ok && r.ncv.size() >= 5;
    if (nilpotent_nonabelian && r.cd.size() >= 3) {
      b_ok = b_ok && r.cdc.size() >= 4;
      b_details += ", |cdc| = " + std::to_string(r.cdc.size());
    }
    out.push_back(make_verdict(s.name, "lemma_2_4b", nilpotent_nonabelian, b_ok, b_details));
    const bool pgroup = nilpotent_nonabelian && r.flags.p_group_prime.has_value();
    out.push_back(make_verdict(s.name, "lemma_2_4c", pgroup, c_ok, pgroup ? "no modulus-1 values on nonlinear rows" : "not a nonabelian p-group"));
  }
  {  // weakened root-of-unity criterion
    const bool hyp = !r.flags.abelian && std::any_of(r.root_of_unity_elements.begin(), r.root_of_unity_elements.end(),
                                                       [](int c) { return c != 0; });
    bool ok = true;
    std::string details = "no nonidentity root-of-unity class";
    if (hyp) {
      const ElementSet gd = commutator_subgroup(g, whole_group(g));
      const ElementSet z = center(g);
      std::vector<int> gens(gd.begin(), gd.end());
      gens.insert(gens.end(), z.begin(), z.end());
      const ElementSet fit = generate_subgroup(g, gens);
      ok = is_abelian(g, gd) && intersect(gd, z).size() == 1 && is_abelian(g, fit);
      details = "|G'| = " + std::to_string(gd.size()) + ", |Z| = " + std::to_string(z.size());
    }
    out.push_back(make_verdict(s.name, "lemma_2_5", hyp, ok, details));
  }
  out.push_back(check_lemma_2_6(s));
  return out;
}

namespace {

const std::vector<std::string_view> kTheoremIds = {"A", "B", "C", "D", "E"};

}  // namespace

bool is_known_theorem(std::string_view theorem) {
  return std::find(kTheoremIds.begin(), kTheoremIds.end(), theorem) != kTheoremIds.end() || theorem == "lemma_2_6" ||
         theorem == "lemmas" || theorem == "theorems" || theorem == "all";
}

std::vector<Verdict> run_checks(const Subject& s, std::string_view theorem, const EvalOptions& options) {
  std::vector<Verdict> out;
  const bool all = theorem == "all";
  const bool theorems = all || theorem == "theorems";
  if (theorems || theorem == "A") out.push_back(check_A(s));
  if (theorems || theorem == "B") out.push_back(check_B(s));
  if (theorems || theorem == "C") out.push_back(check_C(s));
  if (theorems || theorem == "D") out.push_back(check_D(s));
  if (theorems || theorem == "E") out.push_back(check_E(s));
  if (all || theorem == "lemmas") {
    auto lemmas = check_lemmas(s, options);
    out.insert(out.end(), lemmas.begin(), lemmas.end());
  } else if (theorem == "lemma_2_6") {
    out.push_back(check_lemma_2_6(s));
  }
  if (out.empty() && !is_known_theorem(theorem)) {
    throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + std::string(theorem) + "'");
  }
  return out;
}

std::vector<Subject> evaluate_all(const std::vector<const CatalogEntry*>& entries, const EvalOptions& options,
                                  unsigned jobs) {
  std::vector<Subject> out(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        out[i] = evaluate(*entries[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

struct Predicate {
  std::string kind;
  long k = 0;
};

Predicate parse_predicate(std::string_view text) {
  std::string s(text);
  for (const std::string from : {"≤", "<="}) {
    const auto at = s.find(from);
    if (at != std::string::npos) s.replace(at, from.size(), "<");
  }
  if (s == "rational") return {"rational", 0};
  const auto op = s.find_first_of("=<");
  if (op == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad predicate '" + std::string(text) + "'");
  Predicate p;
  p.kind = s.substr(0, op + 1);
  const std::string num = s.substr(op + 1);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p.k);
  if (ec != std::errc() || ptr != num.data() + num.size() ||
      (p.kind != "cdc=" && p.kind != "ncv=" && p.kind != "ncv<" && p.kind != "all-rows<")) {
    throw Error(ErrorCode::InvalidArgument, "bad predicate '" + std::string(text) + "'");
  }
  return p;
}

}  // namespace

bool matches(const Subject& s, std::string_view predicate) {
  const Predicate p = parse_predicate(predicate);
  const auto& r = s.report;
  const auto k = static_cast<std::size_t>(p.k);
  if (p.kind == "rational") return r.is_rational_group;
  if (p.kind == "cdc=") return r.cdc.size() == k;
  if (p.kind == "ncv=") return r.ncv.size() == k;
  if (p.kind == "ncv<") return r.ncv.size() <= k;
  return std::all_of(r.per_char_cv_sizes.begin(), r.per_char_cv_sizes.end(), [&](std::size_t n) { return n <= k; });
}

std::vector<std::string> scan(const std::vector<Subject>& subjects, std::string_view predicate) {
  parse_predicate(predicate);
  std::vector<std::string> out;
  for (const auto& s : subjects) {
    if (matches(s, predicate)) out.push_back(s.name);
  }
  return out;
}

std::vector<Verdict> scan_assertions(const std::vector<Subject>& subjects) {
  std::vector<Verdict> out;
  {
    std::vector<std::string> mismatched;
    std::vector<std::string> cdc2;
    for (const auto& s : subjects) {
      if (s.report.flags.abelian) continue;
      const bool is2 = s.report.cdc.size() == 2;
      if (is2) cdc2.push_back(s.name);
      if (is2 != (case_a_shape(s) || s4_fingerprint(s))) mismatched.push_back(s.name);
    }
    std::string details = "nonabelian with cdc=2: ";
    for (std::size_t i = 0; i < cdc2.size(); ++i) details += (i ? ", " : "") + cdc2[i];
    for (const auto& m : mismatched) details += "; mismatch " + m;
    out.push_back(make_verdict("catalog", "scan_cdc2_shapes", true, mismatched.empty(), details));
  }
  {
    std::vector<std::string> bad;
    for (const auto& s : subjects) {
      if (s.report.dl && *s.report.dl == 4 && s.report.cdc.size() == 2) bad.push_back(s.name);
    }
    out.push_back(make_verdict("catalog", "scan_dl4_cdc2", true, bad.empty(),
                               bad.empty() ? "no group with dl 4 and |cdc| = 2" : "found " + bad.front()));
  }
  {
    std::vector<std::string> found;
    for (const auto& s : subjects) {
      if (!s.report.dl && s.report.ncv.size() == 3) found.push_back(s.name);
    }
    const bool has_s5 = std::any_of(subjects.begin(), subjects.end(), [](const Subject& s) { return s.name == "S5"; });
    const bool ok = has_s5 ? found == std::vector<std::string>{"S5"} : found.empty();
    std::string details = "nonsolvable with |ncv| = 3: ";
    for (std::size_t i = 0; i < found.size(); ++i) details += (i ? ", " : "") + found[i];
    out.push_back(make_verdict("catalog", "scan_nonsolvable_ncv3", true, ok, details));
  }
  {
    std::vector<std::string> names;
    bool ok = true;
    for (const auto& s : subjects) {
      for (const char* d : {"dih_10", "dih_14", "dih_18", "dih_22"}) {
        if (s.name != d) continue;
        names.push_back(s.name + " |ncv| = " + std::to_string(s.report.ncv.size()));
        if (s.report.ncv.size() <= 3) ok = false;
      }
    }
    std::string details;
    for (std::size_t i = 0; i < names.size(); ++i) details += (i ? ", " : "") + names[i];
    out.push_back(make_verdict("catalog", "scan_dihedral_ncv", !names.empty(), ok, details));
  }
  return out;
}

std::vector<MnRow> mn_table_rows() {
  struct Tabulated {
    int n;
    int first_offset;  // first part is n - first_offset
    std::vector<int> rest;
    long value;
    std::vector<int> corrected_rest;  // used when the printed type is not a partition of n
  };
  const std::vector<Tabulated> tabulated = {
      {15, 6, {4, 2}, 0, {}},          {15, 4, {2, 2}, -1, {}},
      {15, 10, {4, 2, 2, 2}, -2, {}},  {15, 8, {2, 2, 2, 2}, -3, {}},
      {16, 2, {2}, 0, {}},             {16, 8, {4, 2, 2, 2}, -1, {4, 2, 2}},
      {16, 6, {2, 2, 2}, -2, {}},      {16, 12, {4, 2, 2, 2, 2}, -3, {}},
  };
  auto show = [](const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s;
  };
  std::vector<MnRow> out;
  for (const auto& t : tabulated) {
    std::vector<int> printed{t.n - t.first_offset};
    printed.insert(printed.end(), t.rest.begin(), t.rest.end());
    std::vector<int> used = printed;
    MnRow row;
    row.n = t.n;
    row.printed = show(printed);
    if (std::accumulate(printed.begin(), printed.end(), 0) != t.n) {
      used = {t.n - t.first_offset};
      used.insert(used.end(), t.corrected_rest.begin(), t.corrected_rest.end());
      row.corrected = true;
    }
    const Partition lambda({t.n - 2, 1, 1});
    const CycleType rho = CycleType::from_unsorted(used);
    row.partition = show(lambda.parts());
    row.cycle_type = show(rho.parts());
    row.expected = t.value;
    row.actual = mn_value(lambda, rho).get_si();
    out.push_back(row);
  }
  return out;
}

long wedge_value(const CycleType& rho) {
  long f = 0;
  long f2 = 0;
  for (int part : rho.parts()) {
    if (part == 1) ++f;
    if (part == 1 || part == 2) f2 += part;
  }
  return (f * f - f2) / 2 - f + 1;
}

std::vector<std::string> wedge_oracle_mismatches(int max_n) {
  std::vector<std::string> out;
  for (int n = 3; n <= max_n; ++n) {
    const Partition lambda({n - 2, 1, 1});
    for (const auto& rho : partitions_of(n)) {
      const long expected = wedge_value(rho);
      const mpz_class actual = mn_value(lambda, rho);
      if (actual != expected) {
        std::ostringstream msg;
        msg << "n=" << n << " rho=";
        for (int part : rho.parts()) msg << part << ' ';
        msg << "mn=" << actual.get_str() << " wedge=" << expected;
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

}  // namespace charval
