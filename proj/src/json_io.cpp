#include "frobenius/json_io.hpp"

namespace frob::json {

Json to_json(const Partition& lambda) {
  Json out = Json::array();
  for (int p : lambda.parts()) out.push_back(p);
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw FormatError("partition entries must be integers, got " + v.dump());
    parts.push_back(v.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    Json t;
    t["partition"] = to_json(lambda);
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["basis"] = std::string(1, basis_tag(f.basis()));
  out["degree"] = f.degree();
  out["terms"] = std::move(terms);
  return out;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational coefficient_from_json(const Json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return Rational(c.get<long long>());
  throw FormatError("coefficients must be strings or integers, got " + c.dump());
}

}  // namespace

SymFunc symfunc_from_json(const Json& j) {
  const auto& basis_field = field(j, "basis");
  if (!basis_field.is_string()) throw FormatError("\"basis\" must be a string");
  const Basis basis = parse_basis(basis_field.get<std::string>());
  const auto& terms_field = field(j, "terms");
  if (!terms_field.is_array()) throw FormatError("\"terms\" must be an array");

  std::vector<std::pair<Partition, Rational>> terms;
  for (const auto& t : terms_field)
    terms.emplace_back(partition_from_json(field(t, "partition")),
                       coefficient_from_json(field(t, "coeff")));

  std::optional<int> degree;
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 0)
      throw FormatError("\"degree\" must be a nonnegative integer");
    degree = j["degree"].get<int>();
  }
  if (terms.empty()) {
    if (!degree) throw FormatError("empty term list needs an explicit \"degree\"");
    return SymFunc(basis, *degree);
  }
  SymFunc f = SymFunc::from_terms(basis, terms);
  if (degree && *degree != f.degree())
    throw PreconditionError("inhomogeneous symmetric function: weights " +
                            std::to_string(*degree) + " and " +
                            std::to_string(f.degree()));
  return f;
}

Json to_json(const FiniteAction& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(g.one_based());
  Json out;
  out["n"] = a.rank();
  out["m"] = a.ground_size();
  out["gens"] = std::move(gens);
  return out;
}

FiniteAction action_from_json(const Json& j) {
  const auto& n = field(j, "n");
  const auto& m = field(j, "m");
  const auto& gens = field(j, "gens");
  if (!n.is_number_integer() || !m.is_number_integer())
    throw FormatError("\"n\" and \"m\" must be integers");
  if (!gens.is_array()) throw FormatError("\"gens\" must be an array");
  std::vector<Permutation> perms;
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (!g.is_array()) throw FormatError("each generator must be an array");
    std::vector<int> images;
    for (const auto& v : g) {
      if (!v.is_number_integer())
        throw FormatError("generator images must be integers");
      images.push_back(v.get<int>());
    }
    try {
      perms.push_back(Permutation::from_one_based(images));
    } catch (const PreconditionError&) {
      throw FormatError("generator " + std::to_string(i + 1) +
                        " is not a permutation of 1..m");
    }
  }
  return FiniteAction(n.get<int>(), m.get<int>(), std::move(perms));
}

Json to_json(const OrbitReport& report) {
  Json out = Json::array();
  for (const auto& [mu, count] : report) {
    Json row;
    row["mu"] = to_json(mu);
    row["orbits"] = count.str();
    out.push_back(std::move(row));
  }
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace frob::json
