#pragma once

#include <string>

#include <json.hpp>

#include "tenpat/alpha.hpp"
#include "tenpat/containment.hpp"
#include "tenpat/core.hpp"
#include "tenpat/division.hpp"
#include "tenpat/extremal.hpp"
#include "tenpat/pattern.hpp"
#include "tenpat/shadow.hpp"

namespace tenpat {

using Json = nlohmann::ordered_json;

// Wire format for tensors: {"t": int, "shape": [int x t],
// "ones": [[int x t] ...]} with ones sorted lexicographically and free of
// duplicates. The parser rejects any violation with a message naming the
// offending field.
BitTensor tensor_from_json(const Json& j, const std::string& context = "tensor");
BitTensor tensor_from_string(const std::string& text, const std::string& context = "input");
BitTensor tensor_from_file(const std::string& path);

Json tensor_to_json(const BitTensor& m);

Json division_to_json(const Division& d);
Json embedding_to_json(const Embedding& e);
Json classification_to_json(const PatternClass& cls);
Json search_report_to_json(const SearchReport& report);
Json face_counts_to_json(const FaceCounts& fc);
Json cascade_to_json(const CascadeRep& rep);

// Big integers are emitted as JSON numbers while they fit an unsigned 64-bit
// value and as decimal strings beyond that.
Json big_to_json(const BigInt& v);
Json rat_to_json(const BigRat& v);

// Flattened key,value view of a report for --format csv. Arrays of scalars
// join with ';', nested objects flatten with dotted keys.
std::string report_to_csv(const Json& report);

}  // namespace tenpat
