#include <algorithm>
#include <set>

#include <json.hpp>

#include "singulus/cli.hpp"

namespace singulus::cli {

using nlohmann::json;

namespace {

std::int64_t integer_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw SchemaError(path, "integer out of range");
  return j.get<std::int64_t>();
}

std::optional<std::string> string_field(const json& root, const char* key) {
  auto it = root.find(key);
  if (it == root.end()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(key, "expected a string");
  return it->get<std::string>();
}

}  // namespace

BettiTableDocument read_table_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("(document)", std::string("invalid JSON at byte ") + std::to_string(e.byte));
  }
  if (!root.is_object()) throw SchemaError("(document)", "expected a JSON object");

  static const std::set<std::string> known{"n", "d", "columns", "label", "source"};
  for (const auto& [key, value] : root.items())
    if (!known.contains(key)) throw SchemaError(key, "unknown field");

  for (const char* key : {"n", "d", "columns"})
    if (!root.contains(key)) throw SchemaError(key, "missing required field");
  const auto n = integer_field(root["n"], "n");
  const auto d = integer_field(root["d"], "d");
  if (n < 2 || n > 64) throw SchemaError("n", "must satisfy 2 <= n <= 64");
  if (d < 3 || d > 1000000) throw SchemaError("d", "must satisfy 3 <= d <= 1000000");

  const json& cols = root["columns"];
  if (!cols.is_array()) throw SchemaError("columns", "expected an array");
  std::vector<BettiTable::Column> columns(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::string at = "columns[" + std::to_string(c) + "]";
    const json& col = cols[c];
    if (!col.is_object()) throw SchemaError(at, "expected an object");
    for (const auto& [key, value] : col.items())
      if (key != "k" && key != "degrees") throw SchemaError(at + "." + key, "unknown field");
    if (!col.contains("k")) throw SchemaError(at + ".k", "missing required field");
    if (!col.contains("degrees")) throw SchemaError(at + ".degrees", "missing required field");
    const auto k = integer_field(col["k"], at + ".k");
    if (k < 1 || k > n) throw SchemaError(at + ".k", "must satisfy 1 <= k <= n");
    if (seen[static_cast<std::size_t>(k - 1)]) throw SchemaError(at + ".k", "column " + std::to_string(k) + " listed twice");
    seen[static_cast<std::size_t>(k - 1)] = true;
    const json& degrees = col["degrees"];
    if (!degrees.is_array()) throw SchemaError(at + ".degrees", "expected an array");
    auto& out = columns[static_cast<std::size_t>(k - 1)];
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const std::string where = at + ".degrees[" + std::to_string(i) + "]";
      const auto v = integer_field(degrees[i], where);
      if (v < 0) throw SchemaError(where, "degrees must be non-negative");
      out.push_back(v);
    }
  }
  auto label = string_field(root, "label");
  auto source = string_field(root, "source");
  return BettiTableDocument{BettiTable(static_cast<int>(n), static_cast<int>(d), std::move(columns)),
                            std::move(label), std::move(source)};
}

std::string write_table_document(const BettiTableDocument& doc) {
  const auto& t = doc.table;
  std::string s = "{\n  \"columns\": [\n";
  for (int k = 1; k <= t.n(); ++k) {
    json col = {{"degrees", t.column(k)}, {"k", k}};
    s += "    " + col.dump() + (k < t.n() ? ",\n" : "\n");
  }
  s += "  ],\n  \"d\": " + std::to_string(t.d()) + ",\n";
  if (doc.label) s += "  \"label\": " + json(*doc.label).dump() + ",\n";
  s += "  \"n\": " + std::to_string(t.n());
  if (doc.source) s += ",\n  \"source\": " + json(*doc.source).dump();
  s += "\n}\n";
  return s;
}

}  // namespace singulus::cli
