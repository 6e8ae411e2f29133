#pragma once
// JSON encodings of paths, generators, chains, complex specs and homology results.
#include "json.hpp"

#include "polyech/homology.hpp"

namespace polyech {

using json = nlohmann::json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const AdmissiblePath& p);
AdmissiblePath path_from_json(const json& j);

// The path fields plus "labels": ["e"|"h", ...] in edge order.
json to_json(const Generator& g);
Generator generator_from_json(const json& j);

json to_json(const Chain& x);
json to_json(const TwistedChain& x);
Chain chain_from_json(const json& j);
TwistedChain twisted_chain_from_json(const json& j);

json to_json(const ComplexSpec& s);
ComplexSpec spec_from_json(const json& j);

json to_json(const HomologyGroup& h, const ComplexSpec& spec);
HomologyGroup homology_from_json(const json& j);

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

}  // namespace polyech
