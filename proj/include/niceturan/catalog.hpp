#ifndef NICETURAN_CATALOG_HPP
#define NICETURAN_CATALOG_HPP

#include "niceturan/search.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace niceturan
{
    // A stored record that does not survive recounting its witnesses.
    class CatalogMismatch : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct CatalogKey
    {
        SearchMode mode = SearchMode::nice;
        int n = 0;
        std::string h_canonical;
        std::string f_canonical;

        auto operator<=>(const CatalogKey &) const = default;
    };

    struct CatalogEntry
    {
        CatalogKey key;
        SearchRecord record;
        std::string timestamp;
        std::string tool_version;
    };

    auto catalog_key(const SearchRecord & record) -> CatalogKey;

    // Recounts every witness; returns a description of the first mismatch.
    auto verify_record(const SearchRecord & record) -> std::optional<std::string>;

    /// Accumulated search results, one entry per key, stored as JSON.
    class Catalog
    {
    public:
        // A missing file gives an empty catalog. Throws ParseError on bad
        // content and CatalogMismatch on witnesses that fail to re-verify.
        static auto load(const std::string & path) -> Catalog;
        void save(const std::string & path) const;

        auto entries() const -> const std::vector<CatalogEntry> & { return entries_; }
        auto find(const CatalogKey & key) const -> const CatalogEntry *;

        /// Adds the record, or compares it against an existing entry with the
        /// same key. Returns a discrepancy description when they disagree; the
        /// stored entry is left unchanged in that case.
        auto record(const SearchRecord & record) -> std::optional<std::string>;

    private:
        std::vector<CatalogEntry> entries_;
    };

    auto tool_version() -> std::string;
}

#endif
