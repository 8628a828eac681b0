#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "vkh/diagram.hpp"
#include "vkh/khovanov.hpp"
#include "vkh/lee.hpp"
#include "vkh/polynomial.hpp"
#include "vkh/transforms.hpp"

namespace vkh {

/// Direct state sum of (-1)^(r - n-) q^(r + n+ - 2n-) (q + 1/q)^k over all states.
/// Shares only state tracing with the homology pipeline.
LaurentPoly bracket_oracle(const Diagram& d);

struct InvariantOptions {
    bool use_dual = false;                     ///< report and alternatize with the dual coloring
    std::optional<BuilderKind> builder;        ///< default: source-sink when colorable
    bool compute_rasmussen = true;
};

struct InvariantReport {
    std::string code;
    int components = 0;
    int crossings = 0;
    int n_plus = 0;
    int n_minus = 0;
    bool connected = false;
    bool alternating = false;
    std::optional<int> genus;
    bool colorable = false;
    std::optional<std::pair<int, int>> sigma;       ///< (sigma for the chosen coloring, for its dual)
    std::optional<std::pair<int, int>> sigma_pair;  ///< (min, max)
    std::optional<KhPolynomial> kh;
    std::string builder;
    std::optional<RasmussenResult> rasmussen;
    std::optional<GenusReport> genus_report;
};

InvariantReport compute_invariants(const Diagram& d, const InvariantOptions& options = {});

nlohmann::json kh_to_json(const KhPolynomial& p);
nlohmann::json laurent_to_json(const LaurentPoly& p);
nlohmann::json to_json(const RasmussenResult& r);
nlohmann::json to_json(const GenusReport& r);
nlohmann::json to_json(const GoeritzData& g);
nlohmann::json to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

}  // namespace vkh
