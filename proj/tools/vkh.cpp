// vkh: invariants of checkerboard-colorable virtual links from signed Gauss codes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vkh/coloring.hpp"
#include "vkh/corpus.hpp"
#include "vkh/errors.hpp"
#include "vkh/khovanov.hpp"
#include "vkh/lee.hpp"
#include "vkh/report.hpp"
#include "vkh/transforms.hpp"

namespace {

enum Exit { ok = 0, usage = 1, verification = 2, invariant = 3 };

int exit_code(vkh::ErrorKind kind) {
    switch (kind) {
        case vkh::ErrorKind::internal_invariant:
        case vkh::ErrorKind::filtration_violation:
        case vkh::ErrorKind::single_cycle_found:
            return invariant;
        default:
            return usage;
    }
}

std::string read_code(const std::string& code, const std::string& file) {
    if (file.empty()) return code;
    std::ifstream in(file);
    if (!in) throw vkh::Error(vkh::ErrorKind::malformed_token, "cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

vkh::Coloring chosen_coloring(const vkh::Diagram& d, const vkh::SurfaceData& s, bool use_dual) {
    const auto c = vkh::find_checkerboard_coloring(d, s);
    if (!c) throw vkh::Error(vkh::ErrorKind::not_colorable, "diagram is not checkerboard colorable");
    return use_dual ? vkh::dual(*c, d) : *c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of checkerboard-colorable virtual links given by signed Gauss codes"};
    app.require_subcommand(1);

    std::string code, file, coloring = "primal", builder, op, corpus_path;
    bool json = false, diagnostic = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("code", code, "signed Gauss code, e.g. O1-U2-O3-U1-O2-U3-");
        sub->add_option("--file", file, "read the Gauss code from a file");
        sub->add_flag("--json", json, "emit JSON");
    };
    auto add_coloring = [&](CLI::App* sub) {
        sub->add_option("--coloring", coloring, "coloring used for signatures and D_alt")
            ->check(CLI::IsMember({"primal", "dual"}));
    };
    auto add_builder = [&](CLI::App* sub) {
        sub->add_option("--builder", builder, "cube construction")->check(CLI::IsMember({"sourcesink", "general"}));
    };

    auto* parse = app.add_subcommand("parse", "validate a code and print its canonical form");
    add_input(parse);
    auto* invariants = app.add_subcommand("invariants", "full invariant report");
    add_input(invariants);
    add_coloring(invariants);
    add_builder(invariants);
    auto* kh = app.add_subcommand("kh", "Khovanov polynomial");
    add_input(kh);
    add_builder(kh);
    auto* ras = app.add_subcommand("rasmussen", "Rasmussen invariant from filtered Lee homology");
    add_input(ras);
    ras->add_flag("--diagnostic", diagnostic, "also print E-infinity dimensions");
    auto* alt = app.add_subcommand("alt", "alternatization D_alt");
    add_input(alt);
    add_coloring(alt);
    auto* mirror = app.add_subcommand("mirror", "inverse and mirror images");
    add_input(mirror);
    mirror->add_option("--op", op, "which image")
        ->required()
        ->check(CLI::IsMember({"reverse", "star", "dagger", "stardagger"}));
    auto* bracket = app.add_subcommand("bracket", "Jones state sum");
    add_input(bracket);
    auto* verify = app.add_subcommand("verify", "recompute a corpus of expected values");
    verify->add_option("corpus", corpus_path, "corpus JSON file")->required();
    verify->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        if (verify->parsed()) {
            const vkh::VerifyReport report = vkh::verify_corpus(vkh::load_corpus(corpus_path));
            if (json) std::cout << vkh::to_json(report).dump(2) << '\n';
            else std::cout << vkh::to_text(report);
            return report.failed() == 0 ? ok : verification;
        }

        const vkh::Diagram d = vkh::parse_gauss_code(read_code(code, file));
        const bool use_dual = coloring == "dual";

        if (parse->parsed()) {
            nlohmann::json j = {{"code", vkh::serialize(d)},
                                {"components", d.components().size()},
                                {"crossings", d.crossing_count()},
                                {"n_plus", d.n_plus()},
                                {"n_minus", d.n_minus()},
                                {"connected", vkh::is_connected(d)},
                                {"alternating", vkh::is_alternating(d)}};
            if (vkh::is_connected(d)) {
                const vkh::SurfaceData s = vkh::trace_faces(d);
                j["faces"] = s.face_count;
                j["genus"] = s.genus;
            }
            if (json) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << vkh::serialize(d) << '\n';
                for (auto it = j.begin(); it != j.end(); ++it)
                    if (it.key() != "code") std::cout << it.key() << ": " << it.value().dump() << '\n';
            }
        } else if (invariants->parsed()) {
            vkh::InvariantOptions options;
            options.use_dual = use_dual;
            if (builder == "sourcesink") options.builder = vkh::BuilderKind::source_sink;
            if (builder == "general") options.builder = vkh::BuilderKind::general;
            const vkh::InvariantReport r = vkh::compute_invariants(d, options);
            if (json) std::cout << vkh::to_json(r).dump(2) << '\n';
            else std::cout << vkh::to_text(r);
        } else if (kh->parsed()) {
            vkh::KhPolynomial p;
            if (builder == "general") p = vkh::khovanov_homology(vkh::build_cube_general(d));
            else if (builder == "sourcesink") p = vkh::khovanov_homology(vkh::build_cube_source_sink(d));
            else p = vkh::khovanov_polynomial(d);
            if (json) std::cout << vkh::kh_to_json(p).dump(2) << '\n';
            else std::cout << vkh::format_kh(p) << '\n';
        } else if (ras->parsed()) {
            const vkh::RasmussenResult r = vkh::rasmussen(d);
            nlohmann::json j = vkh::to_json(r);
            if (diagnostic) {
                nlohmann::json e = nlohmann::json::array();
                for (const auto& [ij, dim] : r.e_infinity) e.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", dim}});
                j["e_infinity"] = e;
            }
            if (json) {
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "s: " << r.s << " (s_min " << r.s_min << ", s_max " << r.s_max << ", Lee dim "
                          << r.lee_dim << ")\n";
                if (diagnostic)
                    for (const auto& [ij, dim] : r.e_infinity)
                        std::cout << "E_inf(" << ij.first << "," << ij.second << ") = " << dim << '\n';
            }
        } else if (alt->parsed()) {
            const vkh::SurfaceData s = vkh::trace_faces(d);
            const vkh::Diagram a = vkh::alternatize(d, chosen_coloring(d, s, use_dual));
            const vkh::SurfaceData sa = vkh::trace_faces(a);
            if (json) std::cout << nlohmann::json{{"code", vkh::serialize(a)}, {"genus", sa.genus}}.dump(2) << '\n';
            else std::cout << vkh::serialize(a) << '\n';
        } else if (mirror->parsed()) {
            const vkh::Mirrors m = vkh::mirrors(d);
            const vkh::Diagram& out = op == "reverse" ? m.minus
                                      : op == "star"  ? m.star
                                      : op == "dagger" ? m.dagger
                                                       : m.star_dagger;
            if (json) std::cout << nlohmann::json{{"code", vkh::serialize(out)}}.dump(2) << '\n';
            else std::cout << vkh::serialize(out) << '\n';
        } else if (bracket->parsed()) {
            const vkh::LaurentPoly p = vkh::bracket_oracle(d);
            if (json) std::cout << vkh::laurent_to_json(p).dump(2) << '\n';
            else std::cout << vkh::format_laurent(p) << '\n';
        }
    } catch (const vkh::Error& e) {
        std::cerr << "vkh: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "vkh: " << e.what() << '\n';
        return usage;
    }
    return ok;
}
