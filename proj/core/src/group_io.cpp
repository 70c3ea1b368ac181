#include "crystden/group_io.hpp"

#include <fstream>
#include <sstream>

#include "internal_json.hpp"

namespace crystden {

namespace internal {

nlohmann::json json_from_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

CrystGroup group_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("group document must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("group document needs an integer \"dim\"");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be positive");
  if (!doc.contains("generators") || !doc["generators"].is_array() ||
      doc["generators"].empty()) {
    throw ParseError("group document needs a nonempty \"generators\" array");
  }
  std::vector<AffineElement> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_object() || !g.contains("linear") || !g.contains("translation")) {
      throw ParseError("generator needs \"linear\" and \"translation\"");
    }
    const auto& lin = g["linear"];
    if (!lin.is_array() ||
        lin.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
      throw ParseError("\"linear\" must list dim*dim entries");
    }
    IntMatrix a(dim);
    for (size_t i = 0; i < lin.size(); ++i) {
      if (!lin[i].is_number_integer()) {
        throw ParseError("\"linear\" entries must be integers, no floats");
      }
      a.a[i] = lin[i].get<long long>();
    }
    const auto& tr = g["translation"];
    if (!tr.is_array() || tr.size() != static_cast<size_t>(dim)) {
      throw ParseError("\"translation\" must list dim entries");
    }
    RatVector t(dim);
    for (size_t i = 0; i < tr.size(); ++i) {
      if (!tr[i].is_string()) {
        throw ParseError(
            "\"translation\" entries must be exact rational strings");
      }
      t[i] = parse_rational(tr[i].get<std::string>());
    }
    gens.push_back(AffineElement{std::move(t), std::move(a)});
  }
  return make_cryst_group(dim, std::move(gens));
}

}  // namespace internal

CrystGroup parse_group_json(const std::string& text) {
  return internal::group_from_json(internal::json_from_text(text));
}

CrystGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str());
}

namespace {

NilAutomorphism automorphism_from_json(const NilAlgebra& algebra,
                                       const nlohmann::json& doc) {
  const int n = algebra.dim();
  if (!doc.is_array() || doc.size() != static_cast<size_t>(n) * n) {
    throw ParseError("\"automorphism\" must list dim*dim entries");
  }
  RatMatrix m(n, n);
  for (size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string()) {
      throw ParseError(
          "\"automorphism\" entries must be exact rational strings");
    }
    m.a[i] = parse_rational(doc[i].get<std::string>());
  }
  return make_automorphism(algebra, std::move(m));
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  const nlohmann::json doc = internal::json_from_text(text);
  if (!doc.is_object()) throw ParseError("algebra document must be an object");
  for (const char* field : {"dim", "step"}) {
    if (!doc.contains(field) || !doc[field].is_number_integer()) {
      throw ParseError(std::string("algebra document needs an integer \"") +
                       field + "\"");
    }
  }
  const int dim = doc["dim"].get<int>();
  const int step = doc["step"].get<int>();
  if (!doc.contains("basis") || !doc["basis"].is_array() ||
      doc["basis"].size() != static_cast<size_t>(dim)) {
    throw ParseError("algebra document needs a \"basis\" of dim names");
  }
  std::vector<std::string> names;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw ParseError("basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) {
      throw ParseError("\"brackets\" must be an array of [i, j, l, c]");
    }
    for (const auto& e : doc["brackets"]) {
      if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
          !e[1].is_number_integer() || !e[2].is_number_integer() ||
          !e[3].is_string()) {
        throw ParseError(
            "bracket entries must be [i, j, l, \"p/q\"] with 1-based indices");
      }
      entries.push_back(BracketEntry{e[0].get<int>(), e[1].get<int>(),
                                     e[2].get<int>(),
                                     parse_rational(e[3].get<std::string>())});
    }
  }
  NilAlgebra algebra(dim, step, std::move(names), std::move(entries));
  std::optional<NilAutomorphism> automorphism;
  if (doc.contains("automorphism")) {
    automorphism = automorphism_from_json(algebra, doc["automorphism"]);
  }
  return AlgebraFile{std::move(algebra), std::move(automorphism)};
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read algebra file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

}  // namespace crystden
