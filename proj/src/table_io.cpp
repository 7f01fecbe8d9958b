#include "unidescent/table_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "unidescent/errors.hpp"

namespace unidescent {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::filesystem::path default_cache_path() {
    if (const char* env = std::getenv("UNIDESCENT_CACHE"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "unidescent" / "chartables.json";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "unidescent" / "chartables.json";
    return {};
}

std::vector<CharacterTable> load_table_cache(const std::filesystem::path& path) {
    if (path.empty() || !std::filesystem::exists(path)) return {};
    std::ifstream in(path);
    if (!in) throw cache_error("cannot open cache file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw cache_error("failed reading cache file " + path.string());

    ordered_json doc = ordered_json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return {};  // corrupt: rebuild
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != kCacheVersion)
        return {};  // stale format: rebuild
    if (!doc.contains("tables") || !doc["tables"].is_object()) return {};

    std::vector<CharacterTable> out;
    for (const auto& [key, entry] : doc["tables"].items()) {
        int n = -1;
        try {
            n = std::stoi(key);
        } catch (...) {
            continue;
        }
        if (n < 0 || !entry.is_object() || !entry.contains("values") ||
            !entry["values"].is_array())
            continue;
        std::vector<Int> values;
        values.reserve(entry["values"].size());
        bool ok = true;
        for (const auto& v : entry["values"]) {
            if (!v.is_string()) {
                ok = false;
                break;
            }
            try {
                values.emplace_back(v.get<std::string>());
            } catch (...) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        try {
            out.push_back(CharacterTable::from_values(n, std::move(values)));
        } catch (const cache_error&) {
            continue;  // wrong entry count: rebuild this level on demand
        }
    }
    return out;
}

std::string serialize_table_cache(
    const std::vector<std::shared_ptr<const CharacterTable>>& tables) {
    std::vector<std::shared_ptr<const CharacterTable>> sorted = tables;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a->level() < b->level(); });
    ordered_json doc;
    doc["version"] = kCacheVersion;
    ordered_json entries = ordered_json::object();
    for (const auto& table : sorted) {
        ordered_json entry;
        entry["classes"] = table->classes();
        ordered_json values = ordered_json::array();
        for (const Int& v : table->values()) values.push_back(v.str());
        entry["values"] = std::move(values);
        entries[std::to_string(table->level())] = std::move(entry);
    }
    doc["tables"] = std::move(entries);
    return doc.dump(1) + "\n";
}

void save_table_cache(const std::filesystem::path& path,
                      const std::vector<std::shared_ptr<const CharacterTable>>& tables) {
    if (path.empty()) return;
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw cache_error("cannot create cache directory " + path.parent_path().string());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw cache_error("cannot open cache file for writing: " + path.string());
    out << serialize_table_cache(tables);
    out.flush();
    if (!out) throw cache_error("failed writing cache file " + path.string());
}

}  // namespace unidescent
