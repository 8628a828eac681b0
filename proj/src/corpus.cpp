#include "vkh/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "vkh/coloring.hpp"
#include "vkh/errors.hpp"
#include "vkh/khovanov.hpp"
#include "vkh/lee.hpp"
#include "vkh/polynomial.hpp"
#include "vkh/report.hpp"

namespace vkh {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::malformed_token, "corpus: " + what); }

std::string pair_text(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& j) {
    const nlohmann::json& list = j.is_object() ? j.at("entries") : j;
    if (!list.is_array()) schema("expected an array of entries");
    std::vector<CorpusEntry> out;
    for (const auto& item : list) {
        CorpusEntry e;
        if (!item.contains("name") || !item["name"].is_string()) schema("entry without a name");
        e.name = item["name"].get<std::string>();
        if (item.contains("gauss_code") && !item["gauss_code"].is_null()) {
            e.gauss_code = item["gauss_code"].get<std::string>();
            parse_gauss_code(*e.gauss_code);
        }
        e.classical = item.value("classical", false);
        if (item.contains("expected")) {
            const auto& x = item["expected"];
            if (x.contains("sigma_pair") && !x["sigma_pair"].is_null()) {
                const auto& p = x["sigma_pair"];
                if (!p.is_array() || p.size() != 2) schema(e.name + ": sigma_pair needs two integers");
                e.expected.sigma_pair = normalized_pair({p[0].get<int>(), p[1].get<int>()});
            }
            if (x.contains("rasmussen") && !x["rasmussen"].is_null()) e.expected.rasmussen = x["rasmussen"].get<int>();
            if (x.contains("kh_polynomial") && !x["kh_polynomial"].is_null()) {
                e.expected.kh_polynomial = x["kh_polynomial"].get<std::string>();
                parse_kh(*e.expected.kh_polynomial);
            }
        }
        if (item.contains("provenance")) e.provenance = item["provenance"];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) schema("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        schema(path + ": " + ex.what());
    }
    return parse_corpus(j);
}

const char* to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::pass: return "pass";
        case EntryStatus::fail: return "fail";
        case EntryStatus::skipped: return "skipped";
    }
    return "?";
}

EntryResult verify_entry(const CorpusEntry& e) {
    const auto start = std::chrono::steady_clock::now();
    EntryResult r;
    r.name = e.name;
    if (!e.gauss_code) {
        r.status = EntryStatus::skipped;
        r.message = "no sourced Gauss code";
        return r;
    }
    try {
        const Diagram d = parse_gauss_code(*e.gauss_code);
        const KhPolynomial kh = khovanov_polynomial(d);
        {
            const LaurentPoly euler = graded_euler_characteristic(kh);
            const LaurentPoly bracket = bracket_oracle(d);
            r.fields.push_back({"euler_vs_bracket", euler == bracket, format_laurent(bracket), format_laurent(euler)});
        }
        if (e.expected.kh_polynomial) {
            const KhPolynomial want = parse_kh(*e.expected.kh_polynomial);
            r.fields.push_back({"kh_polynomial", want == kh, format_kh(want), format_kh(kh)});
        }
        if (e.expected.sigma_pair) {
            const SurfaceData s = trace_faces(d);
            const auto c = find_checkerboard_coloring(d, s);
            if (!c) {
                r.fields.push_back({"sigma_pair", false, pair_text(*e.expected.sigma_pair), "not colorable"});
            } else {
                const auto got = normalized_pair(signature_pair(d, s, *c));
                r.fields.push_back({"sigma_pair", got == *e.expected.sigma_pair, pair_text(*e.expected.sigma_pair),
                                    pair_text(got)});
            }
        }
        if (e.expected.rasmussen) {
            const int s = rasmussen(d).s;
            r.fields.push_back(
                {"rasmussen", s == *e.expected.rasmussen, std::to_string(*e.expected.rasmussen), std::to_string(s)});
        }
        r.status = EntryStatus::pass;
        for (const auto& f : r.fields)
            if (!f.ok) r.status = EntryStatus::fail;
    } catch (const Error& ex) {
        r.status = EntryStatus::fail;
        r.message = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.entries.resize(corpus.size());
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) report.entries[i] = verify_entry(corpus[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::size_t VerifyReport::passed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const EntryResult& e) { return e.status == EntryStatus::pass; }));
}
std::size_t VerifyReport::failed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const EntryResult& e) { return e.status == EntryStatus::fail; }));
}
std::size_t VerifyReport::skipped() const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [](const EntryResult& e) { return e.status == EntryStatus::skipped; }));
}

nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json fields = nlohmann::json::array();
        for (const auto& f : e.fields)
            fields.push_back({{"field", f.field}, {"ok", f.ok}, {"expected", f.expected}, {"actual", f.actual}});
        nlohmann::json j = {{"name", e.name}, {"status", to_string(e.status)}, {"fields", fields}, {"seconds", e.seconds}};
        if (!e.message.empty()) j["message"] = e.message;
        entries.push_back(std::move(j));
    }
    return {{"entries", entries},
            {"passed", r.passed()},
            {"failed", r.failed()},
            {"skipped", r.skipped()},
            {"seconds", r.seconds}};
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream out;
    for (const auto& e : r.entries) {
        out << to_string(e.status) << "  " << e.name;
        if (e.status == EntryStatus::skipped) {
            out << "  (" << e.message << ")\n";
            continue;
        }
        out << "  " << static_cast<int>(e.seconds * 1000) << " ms\n";
        for (const auto& f : e.fields)
            if (!f.ok) out << "    " << f.field << ": expected " << f.expected << ", got " << f.actual << '\n';
        if (!e.message.empty()) out << "    " << e.message << '\n';
    }
    out << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped in " << r.seconds
        << " s\n";
    return out.str();
}

}  // namespace vkh
