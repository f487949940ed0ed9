#include <filesystem>
#include <fstream>
#include <sstream>

#include "gelfand/chartab.hpp"
#include "gelfand/error.hpp"
#include "json.hpp"

namespace gelfand {

using json = nlohmann::ordered_json;

std::string cache_file_name(GroupKind kind, int n, int q) {
  return "chartab_" + to_string(kind) + "_n" + std::to_string(n) + "_q" + std::to_string(q) + "_v" +
         std::to_string(kTableFormatVersion) + ".json";
}

std::string table_to_json(const CharacterTable& t) {
  const GroupTable& g = *t.classes.group;
  json doc;
  doc["format_version"] = kTableFormatVersion;
  doc["kind"] = to_string(g.kind());
  doc["n"] = g.n();
  doc["q"] = g.field()->order();
  doc["group_order"] = g.order();
  doc["modulus"] = t.modulus;
  doc["exponent"] = t.exponent;
  doc["root"] = t.root;
  json reps = json::array();
  for (ElemId r : t.classes.reps) reps.push_back(to_literal(g.element(r)));
  doc["class_reps"] = std::move(reps);
  doc["class_sizes"] = t.classes.sizes;
  doc["degrees"] = t.degrees;
  doc["values"] = t.values;
  return doc.dump(1);
}

std::optional<CharacterTable> table_from_json(std::string_view text, const ConjClasses& classes) {
  const GroupTable& g = *classes.group;
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  try {
    if (doc.at("format_version").get<int>() != kTableFormatVersion) return std::nullopt;
    if (doc.at("kind").get<std::string>() != to_string(g.kind()) || doc.at("n").get<int>() != g.n() ||
        doc.at("q").get<int>() != g.field()->order() || doc.at("group_order").get<std::size_t>() != g.order()) {
      return std::nullopt;
    }
    const auto reps = doc.at("class_reps").get<std::vector<std::string>>();
    if (reps.size() != classes.count()) return std::nullopt;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (reps[k] != to_literal(g.element(classes.reps[k]))) return std::nullopt;
    }
    if (doc.at("class_sizes").get<std::vector<std::uint64_t>>() != classes.sizes) return std::nullopt;

    CharacterTable t;
    t.classes = classes;
    t.modulus = doc.at("modulus").get<modp::Residue>();
    t.exponent = doc.at("exponent").get<std::uint64_t>();
    t.root = doc.at("root").get<modp::Residue>();
    t.degrees = doc.at("degrees").get<std::vector<std::uint64_t>>();
    t.values = doc.at("values").get<std::vector<std::vector<modp::Residue>>>();
    if (t.exponent != classes.exponent() || t.values.size() != classes.count()) return std::nullopt;
    for (const auto& row : t.values) {
      if (row.size() != classes.count()) return std::nullopt;
      for (auto v : row) {
        if (v >= t.modulus) return std::nullopt;
      }
    }
    if (!degrees_consistent(t) || !rows_orthogonal(t)) return std::nullopt;
    return t;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

CharacterTable cached_character_table(const ConjClasses& classes, const std::string& cache_dir, unsigned threads,
                                      bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  if (cache_dir.empty()) return character_table(classes, threads);

  const GroupTable& g = *classes.group;
  const std::filesystem::path path =
      std::filesystem::path(cache_dir) / cache_file_name(g.kind(), g.n(), g.field()->order());
  if (std::ifstream in{path}) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (auto t = table_from_json(buf.str(), classes)) {
      if (cache_hit) *cache_hit = true;
      return *std::move(t);
    }
  }
  CharacterTable t = character_table(classes, threads);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  // Write to a sibling and rename so concurrent readers never see a partial file.
  const auto tmp = path.string() + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&t));
  {
    std::ofstream out(tmp);
    out << table_to_json(t) << '\n';
    if (!out) throw Error("cannot write character table cache " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot install character table cache " + path.string() + ": " + ec.message());
  return t;
}

}  // namespace gelfand
