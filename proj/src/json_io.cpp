#include "charval/json_io.hpp"

namespace charval {

namespace {

Json values_json(const std::vector<Cyc>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

Json to_json(const std::string& name, const CharTable& table) {
  const ClassData& cls = table.classes();
  Json classes = Json::array();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    Json c;
    c["size"] = cls.class_sizes[i];
    c["representative"] = table.group->element(cls.representatives[i]).to_cycle_string();
    c["element_order"] = cls.element_orders[i];
    classes.push_back(std::move(c));
  }
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["degree"] = row.degree;
    r["values"] = values_json(row.values);
    rows.push_back(std::move(r));
  }
  Json out;
  out["group"] = name;
  out["order"] = table.group->order();
  out["dixon_prime"] = table.dixon_prime;
  out["classes"] = std::move(classes);
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const InvariantReport& r) {
  Json flags;
  flags["abelian"] = r.flags.abelian;
  flags["elementary_abelian_prime"] = r.flags.elementary_abelian_prime ? Json(*r.flags.elementary_abelian_prime) : Json();
  flags["nilpotent"] = r.flags.nilpotent;
  flags["p_group_prime"] = r.flags.p_group_prime ? Json(*r.flags.p_group_prime) : Json();
  flags["extraspecial"] = r.flags.extraspecial;
  Json op;
  for (const auto& [p, set] : r.flags.o_p) op[std::to_string(p)] = set.size();
  flags["o_p_orders"] = std::move(op);
  if (r.flags.frobenius) {
    Json f;
    f["kernel_order"] = r.flags.frobenius->kernel.size();
    f["complement_order"] = r.flags.frobenius->complement.size();
    flags["frobenius"] = std::move(f);
  } else {
    flags["frobenius"] = nullptr;
  }

  Json out;
  out["order"] = r.order;
  out["class_count"] = r.class_count;
  out["cv"] = values_json(r.cv);
  out["cd"] = r.cd;
  out["cdc"] = values_json(r.cdc);
  out["ncv"] = values_json(r.ncv);
  out["per_char_cv_sizes"] = r.per_char_cv_sizes;
  out["cod"] = r.cod;
  out["b"] = r.b;
  out["dl"] = r.dl ? Json(*r.dl) : Json("unsolvable");
  out["is_rational_group"] = r.is_rational_group;
  out["root_of_unity_elements"] = r.root_of_unity_elements;
  out["flags"] = std::move(flags);
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["group"] = v.group;
  out["theorem"] = v.theorem;
  out["hypothesis_met"] = v.hypothesis_met;
  out["conclusion_holds"] = v.conclusion_holds;
  out["details"] = v.details;
  out["status"] = to_string(v.status);
  return out;
}

Json to_json(const std::vector<Verdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) out.push_back(to_json(v));
  return out;
}

}  // namespace charval
