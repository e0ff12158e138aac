#include "fixmodal/json_io.hpp"

namespace fixmodal {

Json cell_json(const Cell& cell) {
  Json j = Json::array();
  for (int v : cell) j.push_back(v);
  return j;
}

Json tensor_json(const Tensor& t) {
  Json j = Json::array();
  for (const Cell& c : t.cells()) j.push_back(cell_json(c));
  return j;
}

Json pair_json(const IsolatorPair& p) {
  Json j;
  j["world"] = cell_json(p.world);
  j["frame"] = tensor_json(p.frame);
  return j;
}

Json normal_form_json(const NormalForm& nf) {
  Json j;
  j["system"] = std::string(system_name(nf.system));
  j["arity"] = nf.arity;
  Json ds = Json::array();
  for (const IsolatorPair& p : nf.disjuncts) ds.push_back(pair_json(p));
  j["disjuncts"] = std::move(ds);
  return j;
}

Json verdict_json(std::string_view query, System sys, const Verdict& v) {
  Json j;
  j["query"] = std::string(query);
  j["system"] = std::string(system_name(sys));
  j["valid"] = v.valid;
  if (v.witness) j["witness"] = pair_json(*v.witness);
  return j;
}

Json prime_verdict_json(const PrimeVerdict& v) {
  Json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    Json viol;
    switch (*v.violation) {
      case PrimeVerdict::Violation::Empty:
        viol["kind"] = "empty";
        break;
      case PrimeVerdict::Violation::GroundSlice:
        viol["kind"] = "ground";
        viol["slice"] = v.slice;
        break;
      case PrimeVerdict::Violation::MinCorner:
        viol["kind"] = "min_corner";
        viol["slices"] = v.corner_slices;
        break;
    }
    j["violation"] = std::move(viol);
  }
  return j;
}

namespace lab {

using fixmodal::lab::Classification;
using fixmodal::lab::DefinabilityReport;
using fixmodal::lab::Pool;

Json pool_json(const Pool& pool) {
  Json sentences = Json::object();
  for (std::size_t i = 0; i < pool.size(); ++i)
    sentences[pool.name_at(i)] = fixmodal::lab::render_def(pool.def_at(i));
  Json j;
  j["sentences"] = std::move(sentences);
  return j;
}

Pool pool_from_json(const Json& j) {
  if (!j.contains("sentences") || !j["sentences"].is_object())
    throw std::invalid_argument("pool file needs a \"sentences\" object");
  Pool pool;
  for (const auto& [name, text] : j["sentences"].items())
    pool.add(name, fixmodal::lab::parse_def(text.get<std::string>()));
  pool.validate();
  return pool;
}

Json classification_json(const Classification& c) {
  Json j;
  j["grounded"] = c.grounded;
  j["paradoxical"] = c.paradoxical;
  j["inevitable"] = c.inevitable;
  j["intrinsic"] = c.intrinsic;
  j["profile"] = tensor_json(c.profile);
  return j;
}

Json report_json(const DefinabilityReport& r) {
  Json j;
  Json sentences = Json::array();
  for (const auto& s : r.sentences) {
    Json e;
    e["name"] = s.name;
    e.update(classification_json(s.cls));
    sentences.push_back(std::move(e));
  }
  j["sentences"] = std::move(sentences);
  j["intrinsic_set"] = r.intrinsic_set;
  j["inevitable_set"] = r.inevitable_set;
  Json cands = Json::array();
  for (uint32_t m : r.candidate_tensor_masks)
    cands.push_back(tensor_json(Tensor{1, 3, m}));
  j["candidate_isolators"] = std::move(cands);
  j["intrinsic_matches"] = r.intrinsic_matches;
  j["inevitable_matches"] = r.inevitable_matches;
  if (r.discerning_pair) {
    j["discerning_pair"] =
        Json::array({r.discerning_pair->first, r.discerning_pair->second});
  }
  return j;
}

}  // namespace lab

}  // namespace fixmodal
