#pragma once

#include <json.hpp>
#include <string_view>

#include "fixmodal/decide.hpp"
#include "fixmodal/fixlab.hpp"
#include "fixmodal/normalform.hpp"

namespace fixmodal {

using Json = nlohmann::ordered_json;

Json cell_json(const Cell& cell);
Json tensor_json(const Tensor& t);
Json pair_json(const IsolatorPair& p);
Json normal_form_json(const NormalForm& nf);
Json verdict_json(std::string_view query, System sys, const Verdict& v);
Json prime_verdict_json(const PrimeVerdict& v);

namespace lab {
Json pool_json(const fixmodal::lab::Pool& pool);
fixmodal::lab::Pool pool_from_json(const Json& j);
Json classification_json(const fixmodal::lab::Classification& c);
Json report_json(const fixmodal::lab::DefinabilityReport& r);
}  // namespace lab

}  // namespace fixmodal
