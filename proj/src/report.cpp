#include "vkh/report.hpp"

#include <bit>
#include <sstream>

#include "vkh/coloring.hpp"
#include "vkh/errors.hpp"

namespace vkh {

LaurentPoly bracket_oracle(const Diagram& d) {
    const int n = d.crossing_count();
    if (n > 24) throw Error(ErrorKind::inconsistent_inputs, "state sum limited to 24 crossings");
    const int shift = d.n_plus() - 2 * d.n_minus();
    LaurentPoly out;
    for (StateBits s = 0; s < (StateBits{1} << n); ++s) {
        const int r = std::popcount(s);
        const int k = resolve_state(d, s).circle_count;
        long long binom = 1;
        for (int t = 0; t <= k; ++t) {
            out[r + shift + k - 2 * t] += ((r - d.n_minus()) % 2 ? -1 : 1) * binom;
            binom = binom * (k - t) / (t + 1);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

InvariantReport compute_invariants(const Diagram& d, const InvariantOptions& options) {
    InvariantReport r;
    r.code = serialize(d);
    r.components = static_cast<int>(d.components().size());
    r.crossings = d.crossing_count();
    r.n_plus = d.n_plus();
    r.n_minus = d.n_minus();
    r.connected = is_connected(d);
    r.alternating = is_alternating(d);
    if (!r.connected) return r;

    const SurfaceData s = trace_faces(d);
    r.genus = s.genus;
    std::optional<Coloring> coloring = find_checkerboard_coloring(d, s);
    r.colorable = coloring.has_value();
    if (coloring && options.use_dual) coloring = dual(*coloring, d);
    if (coloring) {
        r.sigma = signature_pair(d, s, *coloring);
        r.sigma_pair = normalized_pair(*r.sigma);
    }

    BuilderKind builder = options.builder.value_or(r.colorable ? BuilderKind::source_sink : BuilderKind::general);
    if (builder == BuilderKind::source_sink && !r.colorable)
        throw Error(ErrorKind::not_colorable, "the source-sink builder needs a checkerboard colorable diagram");
    const Cube cube = builder == BuilderKind::source_sink ? build_cube_source_sink(d, *coloring) : build_cube_general(d);
    r.builder = builder == BuilderKind::source_sink ? "sourcesink" : "general";
    r.kh = khovanov_homology(cube);

    if (coloring) {
        if (options.compute_rasmussen && r.components == 1) r.rasmussen = rasmussen(d);
        r.genus_report = genus_report(d, *coloring, *r.kh);
    }
    return r;
}

nlohmann::json kh_to_json(const KhPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, c] : p) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", c}});
    return {{"terms", terms}, {"text", format_kh(p)}};
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p) terms.push_back({{"exponent", e}, {"coefficient", c}});
    return {{"terms", terms}, {"text", format_laurent(p)}};
}

nlohmann::json to_json(const RasmussenResult& r) {
    nlohmann::json survivors = nlohmann::json::array();
    for (const auto& [i, j] : r.survivors) survivors.push_back({i, j});
    return {{"s", r.s}, {"s_min", r.s_min}, {"s_max", r.s_max}, {"lee_dim", r.lee_dim}, {"survivors", survivors}};
}

nlohmann::json to_json(const GenusReport& r) {
    nlohmann::json j = {{"g_diagram", r.g_diagram},
                        {"alt_code", r.alt_code},
                        {"g_alt_diagram", r.g_alt_diagram},
                        {"alt_sigma_pair", {r.alt_sigma_pair.first, r.alt_sigma_pair.second}},
                        {"support_lines", std::vector<int>(r.support_lines.rbegin(), r.support_lines.rend())},
                        {"verdict", r.verdict}};
    j["g_turaev"] = r.g_turaev ? nlohmann::json(*r.g_turaev) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const GoeritzData& g) {
    return {{"pre_goeritz", g.pre_goeritz}, {"goeritz", g.goeritz}, {"mu", g.mu}, {"sigma", g.sigma}, {"types", g.type}};
}

nlohmann::json to_json(const InvariantReport& r) {
    nlohmann::json j = {{"code", r.code},
                        {"components", r.components},
                        {"crossings", r.crossings},
                        {"n_plus", r.n_plus},
                        {"n_minus", r.n_minus},
                        {"connected", r.connected},
                        {"alternating", r.alternating},
                        {"colorable", r.colorable}};
    j["genus"] = r.genus ? nlohmann::json(*r.genus) : nlohmann::json(nullptr);
    if (r.sigma) {
        j["sigma"] = {{"coloring", r.sigma->first}, {"dual", r.sigma->second}};
        j["sigma_pair"] = {r.sigma_pair->first, r.sigma_pair->second};
    }
    if (r.kh) {
        j["khovanov"] = kh_to_json(*r.kh);
        j["builder"] = r.builder;
    }
    if (r.rasmussen) j["rasmussen"] = to_json(*r.rasmussen);
    if (r.genus_report) j["genus_report"] = to_json(*r.genus_report);
    return j;
}

std::string to_text(const InvariantReport& r) {
    std::ostringstream out;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "code: " << r.code << '\n'
        << "components: " << r.components << '\n'
        << "crossings: " << r.crossings << " (n+ " << r.n_plus << ", n- " << r.n_minus << ")\n"
        << "connected: " << yes(r.connected) << '\n'
        << "alternating: " << yes(r.alternating) << '\n';
    if (r.genus) out << "genus: " << *r.genus << '\n';
    out << "colorable: " << yes(r.colorable) << '\n';
    if (r.sigma_pair) out << "sigma pair: (" << r.sigma_pair->first << ", " << r.sigma_pair->second << ")\n";
    if (r.kh) out << "kh: " << format_kh(*r.kh) << "  [" << r.builder << "]\n";
    if (r.rasmussen) {
        out << "s: " << r.rasmussen->s << " (s_min " << r.rasmussen->s_min << ", s_max " << r.rasmussen->s_max << ")\n";
        if (r.rasmussen->s != 0) out << "slice: no (s != 0)\n";
    }
    if (r.genus_report) {
        const GenusReport& g = *r.genus_report;
        out << "D_alt: " << g.alt_code << '\n' << "g(D_alt): " << g.g_alt_diagram << '\n';
        if (g.g_turaev) out << "g_T(D): " << *g.g_turaev << '\n';
        out << "support lines: j - 2i in {";
        bool first = true;
        for (auto it = g.support_lines.rbegin(); it != g.support_lines.rend(); ++it) {
            out << (first ? "" : ", ") << *it;
            first = false;
        }
        out << "}\nsupport verdict: " << (g.verdict ? "pass" : "FAIL") << '\n';
    }
    return out.str();
}

}  // namespace vkh
