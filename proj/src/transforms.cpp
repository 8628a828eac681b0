#include "vkh/transforms.hpp"

#include <algorithm>

#include "vkh/errors.hpp"

namespace vkh {

namespace {

Diagram rewrite(const Diagram& d, int label, MoveKind kind) {
    auto comps = d.components();
    for (auto& comp : comps) {
        for (Visit& v : comp) {
            if (v.label != label) continue;
            if (kind != MoveKind::or_move) v.sign = -v.sign;
            if (kind != MoveKind::sc) v.strand = v.strand == Strand::over ? Strand::under : Strand::over;
        }
    }
    return Diagram::from_components(std::move(comps));
}

std::optional<std::vector<int>> eta_of(const Diagram& d) {
    if (!is_connected(d)) return std::nullopt;
    const SurfaceData s = trace_faces(d);
    const auto c = find_checkerboard_coloring(d, s);
    if (!c) return std::nullopt;
    return c->eta;
}

}  // namespace

const char* to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::or_move: return "or";
        case MoveKind::sc: return "sc";
        case MoveKind::cc: return "cc";
    }
    return "?";
}

Diagram apply_move(const Diagram& d, Move mv) {
    const int x = d.index_of(mv.label);
    Diagram out = rewrite(d, mv.label, mv.kind);

    const auto before = eta_of(d);
    if (!before) return out;
    const auto after = eta_of(out);
    if (!after) throw Error(ErrorKind::internal_invariant, "move destroyed checkerboard colorability");

    // Crossing indices are unchanged by the move.  The fresh coloring of the
    // result may be the dual of the continued one, so accept either.
    const bool eta_flips = mv.kind != MoveKind::sc;
    auto matches = [&](int orientation) {
        for (int y = 0; y < d.crossing_count(); ++y) {
            const int expected = (y == x && eta_flips) ? -(*before)[y] : (*before)[y];
            if (orientation * (*after)[y] != expected) return false;
        }
        return true;
    };
    if (!matches(1) && !matches(-1))
        throw Error(ErrorKind::internal_invariant, std::string("incidence numbers after ") + to_string(mv.kind) +
                                                       " disagree with the move table");
    const int expected_sign = mv.kind == MoveKind::or_move ? d.crossings()[x].sign : -d.crossings()[x].sign;
    if (out.crossings()[x].sign != expected_sign)
        throw Error(ErrorKind::internal_invariant, "crossing sign after move is wrong");
    return out;
}

Diagram apply_everywhere(const Diagram& d, MoveKind kind) {
    Diagram out = d;
    for (const Crossing& x : d.crossings()) out = rewrite(out, x.label, kind);
    return out;
}

Mirrors mirrors(const Diagram& d) {
    auto comps = d.components();
    for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
    return {Diagram::from_components(std::move(comps)), apply_everywhere(d, MoveKind::cc),
            apply_everywhere(d, MoveKind::sc), apply_everywhere(d, MoveKind::or_move)};
}

Diagram alternatize(const Diagram& d, const Coloring& c) {
    if (static_cast<int>(c.eta.size()) != d.crossing_count())
        throw Error(ErrorKind::inconsistent_inputs, "coloring does not belong to the diagram");
    Diagram out = d;
    for (int x = 0; x < d.crossing_count(); ++x)
        if (c.eta[x] < 0) out = rewrite(out, d.crossings()[x].label, MoveKind::or_move);
    return out;
}

int turaev_genus_diagram(const Diagram& d) {
    if (!is_connected(d)) throw Error(ErrorKind::disconnected_diagram, "Turaev genus needs a connected diagram");
    if (trace_faces(d).genus != 0) throw Error(ErrorKind::not_classical, "diagram has positive supporting genus");
    const int n = d.crossing_count();
    if (n == 0) return 0;
    const int s0 = resolve_state(d, StateBits{0}).circle_count;
    const int s1 = resolve_state(d, (StateBits{1} << n) - 1).circle_count;
    const int twice = n + 2 - s0 - s1;
    if (twice < 0 || twice % 2 != 0) throw Error(ErrorKind::internal_invariant, "Turaev genus is not an integer");
    return twice / 2;
}

std::set<int> support_lines(int sigma_xi, int sigma_xi_star, int g) {
    if (sigma_xi - sigma_xi_star != 2 * g)
        throw Error(ErrorKind::inconsistent_inputs, "signature gap " + std::to_string(sigma_xi - sigma_xi_star) +
                                                        " differs from 2g = " + std::to_string(2 * g));
    std::set<int> lines;
    for (int k = 0; k <= g + 1; ++k) lines.insert(-sigma_xi_star + 1 - 2 * k);
    return lines;
}

bool support_verdict(const KhPolynomial& p, int sigma_xi, int sigma_xi_star, int g) {
    const std::set<int> lines = support_lines(sigma_xi, sigma_xi_star, g);
    const std::set<int> support = diagonal_support(p);
    return std::includes(lines.begin(), lines.end(), support.begin(), support.end());
}

GenusReport genus_report(const Diagram& d, const Coloring& c, const KhPolynomial& p) {
    GenusReport r;
    r.g_diagram = trace_faces(d).genus;
    const Diagram alt = alternatize(d, c);
    r.alt_code = serialize(alt);
    const SurfaceData s = trace_faces(alt);
    r.g_alt_diagram = s.genus;
    const auto ac = find_checkerboard_coloring(alt, s);
    if (!ac) throw Error(ErrorKind::internal_invariant, "alternatization is not colorable");
    r.alt_sigma_pair = normalized_pair(signature_pair(alt, s, *ac));
    if (r.g_diagram == 0) r.g_turaev = turaev_genus_diagram(d);
    r.support_lines = support_lines(r.alt_sigma_pair.second, r.alt_sigma_pair.first, r.g_alt_diagram);
    r.verdict = support_verdict(p, r.alt_sigma_pair.second, r.alt_sigma_pair.first, r.g_alt_diagram);
    return r;
}

}  // namespace vkh
