#include "niceturan/catalog.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/report_json.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#ifndef NICETURAN_VERSION
#define NICETURAN_VERSION "0.0.0"
#endif

namespace niceturan
{
    auto tool_version() -> std::string
    {
        return NICETURAN_VERSION;
    }

    auto catalog_key(const SearchRecord & record) -> CatalogKey
    {
        return {record.mode, record.n, canonical_form(from_graph6(record.h)), canonical_form(from_graph6(record.f))};
    }

    auto verify_record(const SearchRecord & record) -> std::optional<std::string>
    {
        Pattern h(from_graph6(record.h)), f(from_graph6(record.f));
        for (const auto & w : record.witnesses) {
            auto g = from_graph6(w);
            if (g.order() != record.n)
                return "witness " + w + " has the wrong order";
            auto value = mode_value(h, f, g, record.mode);
            if (! value)
                return "witness " + w + " is not admissible";
            if (*value != record.value)
                return "witness " + w + " gives " + std::to_string(*value) + ", record says " +
                       std::to_string(record.value);
        }
        return std::nullopt;
    }

    namespace
    {
        auto now_utc() -> std::string
        {
            auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&t, &tm);
            char buf[32];
            std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }
    }

    auto Catalog::load(const std::string & path) -> Catalog
    {
        Catalog catalog;
        if (! std::filesystem::exists(path))
            return catalog;
        std::ifstream in(path);
        Json json;
        try {
            in >> json;
            for (const auto & item : json.at("entries")) {
                CatalogEntry entry;
                entry.record = search_record_from_json(item.at("record"));
                entry.key = catalog_key(entry.record);
                entry.timestamp = item.value("timestamp", "");
                entry.tool_version = item.value("tool_version", "");
                if (catalog.find(entry.key))
                    throw ParseError("duplicate catalog key in " + path);
                if (auto problem = verify_record(entry.record))
                    throw CatalogMismatch("catalog entry fails re-verification: " + *problem);
                catalog.entries_.push_back(std::move(entry));
            }
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError("malformed catalog " + path + ": " + e.what());
        }
        return catalog;
    }

    void Catalog::save(const std::string & path) const
    {
        Json entries = Json::array();
        for (const auto & e : entries_)
            entries.push_back({{"key",
                                {{"mode", to_string(e.key.mode)},
                                 {"n", e.key.n},
                                 {"h", e.key.h_canonical},
                                 {"f", e.key.f_canonical}}},
                               {"record", search_record_json(e.record)},
                               {"timestamp", e.timestamp},
                               {"tool_version", e.tool_version}});
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write catalog " + path);
        out << Json{{"entries", entries}}.dump(2) << "\n";
    }

    auto Catalog::find(const CatalogKey & key) const -> const CatalogEntry *
    {
        for (const auto & e : entries_)
            if (e.key == key)
                return &e;
        return nullptr;
    }

    auto Catalog::record(const SearchRecord & record) -> std::optional<std::string>
    {
        auto key = catalog_key(record);
        if (const auto * existing = find(key)) {
            const auto & old = existing->record;
            if (old.value != record.value)
                return "value " + std::to_string(record.value) + " differs from catalog value " +
                       std::to_string(old.value);
            if (old.witnesses_truncated == record.witnesses_truncated && old.witnesses != record.witnesses)
                return "witness classes differ from the catalog";
            return std::nullopt;
        }
        entries_.push_back({key, record, now_utc(), tool_version()});
        return std::nullopt;
    }
}
