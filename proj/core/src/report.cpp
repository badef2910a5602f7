#include "cwl/report.hpp"

#include "cwl/error.hpp"

namespace cwl {

Json to_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const auto& g : generator_strings(ideal)) out.push_back(g);
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["criterion"] = v.criterion;
  out["applicable"] = v.applicable;
  if (!v.applicable)
    out["conclusion"] = "inapplicable";
  else if (v.conclusion == Conclusion::Inconclusive)
    out["conclusion"] = "inconclusive";
  else
    out["conclusion"] = v.conclusion == Conclusion::True;
  out["direct"] = v.direct ? Json(*v.direct) : Json(nullptr);
  out["mismatch"] = v.mismatch;
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    Json item;
    item["description"] = w.description;
    if (w.ideal) item["ideal"] = to_json(*w.ideal);
    else if (w.degree) item["value"] = *w.degree;
    else item["value"] = w.value;
    witnesses.push_back(std::move(item));
  }
  out["witnesses"] = std::move(witnesses);
  Json bounds = Json::object();
  for (const auto& [k, b] : v.bounds) bounds[k] = b;
  out["bounds"] = std::move(bounds);
  Json flags = Json::object();
  for (const auto& [k, f] : v.flags) flags[k] = f;
  out["flags"] = std::move(flags);
  Json inputs = Json::object();
  for (const auto& [name, ideal] : v.inputs) inputs[name] = to_json(ideal);
  out["inputs"] = std::move(inputs);
  return out;
}

Json to_json(const BettiTable& table) {
  const auto& ring = table.subject().ring();
  Json out;
  out["ideal"] = to_json(table.subject());
  out["projective_dimension"] = table.projective_dimension();
  Json entries = Json::array();
  for (const auto& e : table.entries()) {
    Json item;
    item["i"] = e.homological_degree;
    item["multidegree"] = to_string(e.multidegree, ring);
    item["degree"] = e.multidegree.degree();
    item["rank"] = e.rank;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const RegularityReport& r, const Ring& ring) {
  Json out;
  out["reg"] = r.reg;
  out["projective_dimension"] = r.pd;
  out["witness"] = {{"i", r.witness_homological_degree},
                    {"multidegree", to_string(r.witness_multidegree, ring)}};
  return out;
}

Json to_json(const OrderingCertificate& c) {
  const auto& ring = c.ideal.ring();
  Json out;
  out["ideal"] = to_json(c.ideal);
  out["ok"] = c.ok();
  Json order = Json::array();
  for (const auto& f : c.order) order.push_back(to_string(f, ring));
  out["order"] = std::move(order);
  Json vars = Json::array();
  for (auto z : c.colon_variables) vars.push_back(ring.name(z));
  out["colon_variables"] = std::move(vars);
  Json prefix = Json::array();
  for (bool b : c.prefix_cwl) prefix.push_back(b);
  out["prefix_componentwise_linear"] = std::move(prefix);
  if (c.failure) {
    Json remaining = Json::array();
    for (const auto& f : c.failure->remaining) remaining.push_back(to_string(f, ring));
    out["failure"] = {{"step", c.failure->step},
                      {"remaining", std::move(remaining)},
                      {"input_componentwise_linear", c.failure->input_componentwise_linear}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

Json to_json(const CampaignReport& r) {
  Json out;
  out["campaign"] = r.campaign;
  out["population"] = {{"description", r.population},
                       {"min_arity", r.min_arity},
                       {"max_arity", r.max_arity},
                       {"max_gen_degree", r.max_gen_degree},
                       {"size", r.population_size}};
  out["checked"] = r.checked;
  out["passed"] = r.passed();
  out["violations"] = r.violations;
  Json bounds = Json::object();
  for (const auto& [k, b] : r.bounds) bounds[k] = b;
  out["bounds"] = std::move(bounds);
  out["wall_seconds"] = r.wall_seconds;
  return out;
}

CampaignReport campaign_from_json(const Json& j) {
  try {
    CampaignReport r;
    r.campaign = j.at("campaign").get<std::string>();
    const auto& pop = j.at("population");
    r.population = pop.at("description").get<std::string>();
    r.min_arity = pop.at("min_arity").get<std::size_t>();
    r.max_arity = pop.at("max_arity").get<std::size_t>();
    r.max_gen_degree = pop.at("max_gen_degree").get<std::uint64_t>();
    r.population_size = pop.at("size").get<std::size_t>();
    r.checked = j.at("checked").get<std::size_t>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
    for (const auto& [k, b] : j.at("bounds").items()) r.bounds[k] = b.get<long long>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("campaign report: ") + e.what());
  }
}

std::string dump(const Json& json) { return json.dump(2); }

}  // namespace cwl
