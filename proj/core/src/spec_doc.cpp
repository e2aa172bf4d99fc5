#include "posmon/spec_doc.hpp"

#include <json.hpp>

#include "posmon/error.hpp"

namespace posmon {

using json = nlohmann::json;

Field parse_field(std::string_view tag) {
  if (tag == "Q") return Field::kQ;
  if (tag == "QX") return Field::kQX;
  throw Error(ErrorCode::kDomain, "unknown field tag '" + std::string(tag) + "' (expected Q or QX)");
}

namespace {

Expr parse_at(const json& node, const std::string& path, Field field, bool allow_n) {
  if (!node.is_string()) throw SchemaError(path, "expected an expression string");
  const auto src = node.get<std::string>();
  Expr e = [&] {
    try {
      return parse_expr(src);
    } catch (const SyntaxError& err) {
      throw SchemaError(path, err.what());
    }
  }();
  if (field == Field::kQ && e.mentions_x()) throw SchemaError(path, "X is not allowed in field Q");
  if (!allow_n && e.mentions_n()) {
    throw SchemaError(path, "index variable n is not allowed in an explicit generator");
  }
  return e;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw SchemaError(path + "." + key, "unknown key");
  }
}

}  // namespace

MonoidSpec parse_spec(std::string_view doc) {
  json root;
  try {
    root = json::parse(doc);
  } catch (const json::parse_error& err) {
    throw SchemaError("$", std::string("malformed document: ") + err.what());
  }
  if (!root.is_object()) throw SchemaError("$", "expected an object");
  reject_unknown_keys(root, "$", {"field", "generators", "family"});

  MonoidSpec spec;
  if (!root.contains("field")) throw SchemaError("$.field", "missing");
  if (!root["field"].is_string()) throw SchemaError("$.field", "expected a string");
  try {
    spec.field = parse_field(root["field"].get<std::string>());
  } catch (const Error& err) {
    throw SchemaError("$.field", err.what());
  }

  const bool has_gens = root.contains("generators");
  const bool has_family = root.contains("family");
  if (has_gens == has_family) {
    throw SchemaError("$", "exactly one of 'generators' or 'family' is required");
  }

  if (has_gens) {
    const json& arr = root["generators"];
    if (!arr.is_array()) throw SchemaError("$.generators", "expected an array");
    MonoidSpec::Explicit ex;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.generators[" + std::to_string(i) + "]";
      ex.exprs.push_back(parse_at(arr[i], path, spec.field, false));
      ex.sources.push_back(arr[i].get<std::string>());
    }
    spec.generators = std::move(ex);
    return spec;
  }

  const json& fam = root["family"];
  if (!fam.is_object()) throw SchemaError("$.family", "expected an object");
  reject_unknown_keys(fam, "$.family", {"terms", "term", "n_start"});
  MonoidSpec::Family family;
  if (fam.contains("terms") == fam.contains("term")) {
    throw SchemaError("$.family", "exactly one of 'terms' or 'term' is required");
  }
  if (fam.contains("term")) {
    family.terms.push_back(parse_at(fam["term"], "$.family.term", spec.field, true));
    family.sources.push_back(fam["term"].get<std::string>());
  } else {
    const json& arr = fam["terms"];
    if (!arr.is_array() || arr.empty()) throw SchemaError("$.family.terms", "expected a nonempty array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "$.family.terms[" + std::to_string(i) + "]";
      family.terms.push_back(parse_at(arr[i], path, spec.field, true));
      family.sources.push_back(arr[i].get<std::string>());
    }
  }
  if (fam.contains("n_start")) {
    const json& ns = fam["n_start"];
    if (!ns.is_number_integer() || ns.get<std::int64_t>() < 1) {
      throw SchemaError("$.family.n_start", "expected a positive integer");
    }
    family.n_start = ns.get<std::uint64_t>();
  }
  spec.generators = std::move(family);
  return spec;
}

}  // namespace posmon
