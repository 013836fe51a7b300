#include "mono/report.hpp"

namespace mono {

Json to_json(const SL2Matrix& m) {
  return Json::array({Json::array({m.a().get_str(), m.b().get_str()}),
                      Json::array({m.c().get_str(), m.d().get_str()})});
}

Json to_json(const SubgroupDescriptor& d) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : d.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  if (d.determined) {
    j["psl_index"] = d.psl_index;
    j["sl_index"] = d.sl_index;
    j["contains_minus_I"] = d.contains_minus_I;
  } else {
    j["psl_index"] = "undetermined";
    j["sl_index"] = "undetermined";
    j["contains_minus_I"] = nullptr;
  }
  j["mod2_image_order"] = d.mod2_image_order;
  return j;
}

Json to_json(const BraidWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters) letters.push_back(l.second > 0 ? l.first : -l.first);
  return letters;
}

Json to_json(const MonodromyReport& rep) {
  Json j;
  j["label"] = rep.label;
  j["punctures"] = rep.puncture_count;
  j["basepoint"] = rep.basepoint.str();
  Json mats = Json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  j["lasso_matrices"] = mats;
  Json braids = Json::array();
  for (const auto& w : rep.braids) braids.push_back(to_json(w));
  j["braids"] = braids;
  j["subgroup"] = to_json(rep.subgroup);
  j["deg_J"] = rep.deg_j;
  j["m"] = rep.m;
  j["rank"] = rep.rank;
  j["infinity_type"] = kodaira_type_name(rep.infinity_type, rep.infinity_n);
  j["lasso_product_trace"] = rep.lasso_product.trace().get_str();
  Json bounds;
  for (const auto& [k, v] : rep.bounds_checked) bounds[k] = v;
  j["bounds_checked"] = bounds;
  j["all_bounds_hold"] = rep.all_bounds_hold;
  return j;
}

Json to_json(const KodairaPlace& p) {
  Json j;
  j["place"] = p.at_infinity ? "infinity" : p.place_poly.str();
  j["count"] = p.count;
  j["ord_c4"] = p.ord_c4;
  j["ord_c6"] = p.ord_c6;
  j["ord_disc"] = p.ord_disc;
  j["type"] = kodaira_type_name(p.type, p.n);
  j["e"] = p.e_value;
  return j;
}

Json to_json(const SurfaceBound& sb) {
  Json j;
  Json places = Json::array();
  for (const auto& p : sb.places) places.push_back(to_json(p));
  j["places"] = places;
  j["sum_e"] = sb.sum_e;
  j["bound"] = sb.bound;
  j["deg_J"] = sb.deg_j;
  return j;
}

Json to_json(const TwistReport& rep) {
  Json j;
  j["base"] = to_json(rep.base);
  j["twisted"] = to_json(rep.twisted);
  j["chi"] = rep.chi;
  j["predicted"] = to_json(rep.predicted);
  switch (rep.classification.twist_case) {
    case TwistCase::Equal: j["classification"] = "Equal"; break;
    case TwistCase::IndexTwoSubgroup: j["classification"] = "IndexTwoSubgroup"; break;
    case TwistCase::AdjoinMinusI: j["classification"] = "AdjoinMinusI"; break;
  }
  if (rep.classification.witness) {
    Json w;
    w["sl_index"] = rep.classification.witness->sl_index;
    w["psl_index"] = rep.classification.witness->psl_index;
    w["contains_minus_I"] = rep.classification.witness->contains_minus_I;
    j["witness_H"] = w;
  }
  j["predicted_matches_direct"] = rep.predicted_matches_direct;
  j["psl_indices_equal"] = rep.psl_indices_equal;
  j["sl_ratio_admissible"] = rep.sl_ratio_admissible;
  return j;
}

Json to_json(const HyperellReport& rep) {
  Json j;
  j["label"] = rep.label;
  j["genus"] = rep.genus;
  j["punctures"] = rep.puncture_count;
  Json perms = Json::array();
  for (const auto& p : rep.permutations) perms.push_back(p);
  j["permutation_generators"] = perms;
  j["permutation_group_order"] = rep.permutation_group_order.get_str();
  j["group_order"] = rep.group_order.get_str();
  j["ambient_order"] = rep.ambient_order.get_str();
  j["index"] = rep.index.get_str();
  j["bound"] = rep.bound.str();
  j["bound_holds"] = rep.bound_holds;
  j["sharp"] = rep.sharp;
  j["full_symmetric_image"] = rep.full_symmetric_image;
  return j;
}

Json to_json(const QuarticReport& rep) {
  Json j;
  j["tangency_count"] = rep.tangency_count;
  j["auxiliary_punctures"] = rep.auxiliary_count;
  j["jacobian_p"] = rep.jacobian_p.str();
  j["jacobian_q"] = rep.jacobian_q.str();
  j["j_cross_check"] = rep.j_cross_check;
  j["monodromy"] = to_json(rep.mono);
  return j;
}

Json config_json(const PipelineOptions& opts) {
  Json j;
  j["version"] = kToolVersion;
  j["precision_bits"] = static_cast<long>(opts.precision);
  j["precision_cap"] = static_cast<long>(opts.precision_cap);
  j["max_cosets"] = opts.max_cosets;
  j["seed"] = opts.seed;
  j["step_budget"] = opts.step_budget;
  return j;
}

}  // namespace mono
