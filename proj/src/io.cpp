#include "tenpat/io.hpp"

#include <climits>
#include <fstream>
#include <sstream>

#include "tenpat/errors.hpp"

namespace tenpat {

namespace {

int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw parse_error(where + ": expected an integer");
  const long long v = j.get<long long>();
  if (v < INT_MIN || v > INT_MAX) throw parse_error(where + ": value out of range");
  return static_cast<int>(v);
}

}  // namespace

BitTensor tensor_from_json(const Json& j, const std::string& context) {
  if (!j.is_object()) throw parse_error(context + ": expected a JSON object");
  for (const std::string field : {"t", "shape", "ones"}) {
    if (!j.contains(field)) throw parse_error(context + ": missing field \"" + field + "\"");
  }
  const int t = require_int(j.at("t"), context + ".t");
  if (t < 1) throw parse_error(context + ".t: must be at least 1");
  const Json& jshape = j.at("shape");
  if (!jshape.is_array() || static_cast<int>(jshape.size()) != t) {
    throw parse_error(context + ".shape: expected an array of " + std::to_string(t) +
                      " integers");
  }
  std::vector<int> dims(t);
  for (int r = 0; r < t; ++r) {
    dims[r] = require_int(jshape.at(r), context + ".shape[" + std::to_string(r) + "]");
    if (dims[r] < 1) {
      throw parse_error(context + ".shape[" + std::to_string(r) + "]: must be positive");
    }
  }
  const Json& jones = j.at("ones");
  if (!jones.is_array()) throw parse_error(context + ".ones: expected an array");
  std::vector<Coord> ones;
  ones.reserve(jones.size());
  for (std::size_t i = 0; i < jones.size(); ++i) {
    const std::string where = context + ".ones[" + std::to_string(i) + "]";
    const Json& jc = jones.at(i);
    if (!jc.is_array() || static_cast<int>(jc.size()) != t) {
      throw parse_error(where + ": expected an array of " + std::to_string(t) + " indices");
    }
    Coord c(t);
    for (int r = 0; r < t; ++r) {
      c[r] = require_int(jc.at(r), where + "[" + std::to_string(r) + "]");
      if (c[r] < 0 || c[r] >= dims[r]) {
        throw parse_error(where + "[" + std::to_string(r) + "]: index " + std::to_string(c[r]) +
                          " out of range for axis length " + std::to_string(dims[r]));
      }
    }
    if (!ones.empty()) {
      if (c == ones.back()) throw parse_error(where + ": duplicate coordinate");
      if (c < ones.back()) {
        throw parse_error(where + ": ones are not sorted lexicographically");
      }
    }
    ones.push_back(std::move(c));
  }
  return BitTensor(Shape(std::move(dims)), std::move(ones));
}

BitTensor tensor_from_string(const std::string& text, const std::string& context) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    // parse_error, but also out_of_range on overflowing literals
    throw parse_error(context + ": " + e.what());
  }
  return tensor_from_json(j, context);
}

BitTensor tensor_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return tensor_from_string(buf.str(), path);
}

Json tensor_to_json(const BitTensor& m) {
  Json j;
  j["t"] = m.t();
  j["shape"] = m.shape().dims;
  Json ones = Json::array();
  for (const Coord& c : m.ones()) ones.push_back(c);
  j["ones"] = std::move(ones);
  return j;
}

Json division_to_json(const Division& d) {
  Json j;
  j["cuts"] = d.cuts;
  j["parts"] = d.parts();
  return j;
}

Json embedding_to_json(const Embedding& e) { return Json(e.selections); }

Json classification_to_json(const PatternClass& cls) {
  Json j;
  j["valid"] = cls.valid;
  j["free"] = cls.free;
  j["permutation"] = cls.permutation;
  j["latin"] = cls.latin;
  if (cls.sunflower) {
    j["sunflower_core"] = cls.sunflower->axes;
    j["core_values"] = cls.sunflower->values;
  } else {
    j["sunflower_core"] = nullptr;
    j["core_values"] = nullptr;
  }
  if (!cls.diagnostics.empty()) j["diagnostics"] = cls.diagnostics;
  return j;
}

Json search_report_to_json(const SearchReport& report) {
  Json j;
  j["value"] = report.value;
  j["witness"] = report.witness ? tensor_to_json(*report.witness) : Json(nullptr);
  j["nodes"] = report.nodes;
  j["exact"] = report.exact;
  return j;
}

Json face_counts_to_json(const FaceCounts& fc) { return Json(fc.counts); }

Json cascade_to_json(const CascadeRep& rep) {
  Json j;
  j["k"] = rep.k;
  j["t"] = rep.t;
  Json terms = Json::array();
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    Json term;
    term["level"] = rep.terms[i].level;
    term["n"] = big_to_json(rep.terms[i].n);
    term["colors"] = rep.t - static_cast<int>(i);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json big_to_json(const BigInt& v) {
  if (fits_uint64(v)) {
    const std::uint64_t u = to_uint64(v);
    if (u <= static_cast<std::uint64_t>(INT64_MAX)) return Json(u);
  }
  return Json(to_string(v));
}

Json rat_to_json(const BigRat& v) {
  Json j;
  j["num"] = big_to_json(BigInt(v.get_num()));
  j["den"] = big_to_json(BigInt(v.get_den()));
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) scalars = false;
    }
    if (scalars) {
      std::string joined;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) joined += ';';
        joined += j.at(i).is_string() ? j.at(i).get<std::string>() : j.at(i).dump();
      }
      out.emplace_back(prefix, joined);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) {
        flatten(j.at(i), prefix + "[" + std::to_string(i) + "]", out);
      }
    }
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string report_to_csv(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string csv = "key,value\n";
  for (const auto& [key, value] : rows) {
    csv += key;
    csv += ',';
    csv += value;
    csv += '\n';
  }
  return csv;
}

}  // namespace tenpat
