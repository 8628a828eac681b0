#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace vkh {

struct ExpectedValues {
    std::optional<std::pair<int, int>> sigma_pair;  ///< (min, max)
    std::optional<int> rasmussen;
    std::optional<std::string> kh_polynomial;       ///< table notation
};

struct CorpusEntry {
    std::string name;
    std::optional<std::string> gauss_code;  ///< absent when no sourced code exists
    bool classical = false;
    ExpectedValues expected;
    nlohmann::json provenance;
};

/// Throws Error(malformed_token) on schema problems.
std::vector<CorpusEntry> parse_corpus(const nlohmann::json& j);
std::vector<CorpusEntry> load_corpus(const std::string& path);

enum class EntryStatus { pass, fail, skipped };

struct FieldResult {
    std::string field;
    bool ok = false;
    std::string expected;
    std::string actual;
};

struct EntryResult {
    std::string name;
    EntryStatus status = EntryStatus::skipped;
    std::vector<FieldResult> fields;
    std::string message;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<EntryResult> entries;
    double seconds = 0;
    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
};

/// Recomputes every expected field, plus the Euler characteristic against the
/// bracket state sum.  Entries run concurrently; failures never stop the batch.
EntryResult verify_entry(const CorpusEntry& e);
VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, unsigned threads = 0);

const char* to_string(EntryStatus s);
nlohmann::json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace vkh
