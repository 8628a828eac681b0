#include "vkh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "vkh/errors.hpp"

namespace vkh {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_token: return "MalformedToken";
        case ErrorKind::label_count_mismatch: return "LabelCountMismatch";
        case ErrorKind::sign_conflict: return "SignConflict";
        case ErrorKind::length_mismatch: return "LengthMismatch";
        case ErrorKind::disconnected_diagram: return "DisconnectedDiagram";
        case ErrorKind::not_colorable: return "NotColorable";
        case ErrorKind::not_symmetric: return "NotSymmetric";
        case ErrorKind::filtration_violation: return "FiltrationViolation";
        case ErrorKind::single_cycle_found: return "SingleCycleFound";
        case ErrorKind::not_a_knot: return "NotAKnot";
        case ErrorKind::not_positive: return "NotPositive";
        case ErrorKind::not_negative: return "NotNegative";
        case ErrorKind::unknown_crossing: return "UnknownCrossing";
        case ErrorKind::not_classical: return "NotClassical";
        case ErrorKind::inconsistent_inputs: return "InconsistentInputs";
        case ErrorKind::internal_invariant: return "InternalInvariant";
    }
    return "Error";
}

Diagram::Diagram() : components_(1) { build(); }

Diagram Diagram::from_components(std::vector<std::vector<Visit>> components) {
    if (components.empty()) components.emplace_back();
    Diagram d;
    d.components_ = std::move(components);
    d.build();
    return d;
}

void Diagram::build() {
    crossings_.clear();
    std::map<int, int> index;
    struct Seen {
        int over = 0, under = 0;
    };
    std::vector<Seen> seen;
    for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
        for (int t = 0; t < static_cast<int>(components_[c].size()); ++t) {
            const Visit& v = components_[c][t];
            if (v.sign != 1 && v.sign != -1)
                throw Error(ErrorKind::malformed_token, "sign must be +1 or -1");
            auto [it, fresh] = index.emplace(v.label, static_cast<int>(crossings_.size()));
            if (fresh) {
                crossings_.push_back({v.label, v.sign, {}, {}});
                seen.emplace_back();
            }
            Crossing& x = crossings_[it->second];
            if (x.sign != v.sign)
                throw Error(ErrorKind::sign_conflict,
                            "crossing " + std::to_string(v.label) + " has both signs");
            Seen& s = seen[it->second];
            if (v.strand == Strand::over) {
                ++s.over;
                x.over = {c, t};
            } else {
                ++s.under;
                x.under = {c, t};
            }
        }
    }
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (seen[i].over != 1 || seen[i].under != 1)
            throw Error(ErrorKind::label_count_mismatch,
                        "crossing " + std::to_string(crossings_[i].label) +
                            " must appear once over and once under");
    }

    n_plus_ = static_cast<int>(
        std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.sign > 0; }));

    std::vector<int> base(components_.size());
    edge_first_visit_.clear();
    edge_component_.clear();
    free_loops_ = 0;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        base[c] = static_cast<int>(edge_first_visit_.size());
        if (components_[c].empty()) ++free_loops_;
        for (std::size_t t = 0; t < components_[c].size(); ++t) {
            edge_first_visit_.push_back(static_cast<int>(t));
            edge_component_.push_back(static_cast<int>(c));
        }
    }
    auto out_of = [&](VisitRef r) { return 2 * (base[r.component] + r.position); };
    auto in_of = [&](VisitRef r) {
        const int len = static_cast<int>(components_[r.component].size());
        return 2 * (base[r.component] + (r.position + len - 1) % len) + 1;
    };

    rotation_.assign(crossings_.size(), {});
    slot_.assign(2 * edge_first_visit_.size(), 0);
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& x = crossings_[i];
        if (x.sign > 0)
            rotation_[i] = {in_of(x.under), out_of(x.over), out_of(x.under), in_of(x.over)};
        else
            rotation_[i] = {in_of(x.under), in_of(x.over), out_of(x.under), out_of(x.over)};
        for (int p = 0; p < 4; ++p) slot_[rotation_[i][p]] = static_cast<int>(i) << 2 | p;
    }
}

int Diagram::index_of(int label) const {
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        if (crossings_[i].label == label) return static_cast<int>(i);
    throw Error(ErrorKind::unknown_crossing, "no crossing labelled " + std::to_string(label));
}

HalfEdge Diagram::smoothing_partner(HalfEdge h, bool one) const {
    const int x = crossing_of(h);
    const int p = slot_of(h);
    // 0-smoothing pairs slots 0-1 and 2-3, the 1-smoothing pairs 1-2 and 3-0.
    const int q = one ? ((p % 2 == 0) ? (p + 3) % 4 : (p + 1) % 4) : (p ^ 1);
    return rotation_[x][q];
}

namespace {

[[noreturn]] void malformed(std::string_view text, std::size_t pos, const std::string& why) {
    throw Error(ErrorKind::malformed_token,
                why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

}  // namespace

Diagram parse_gauss_code(std::string_view text) {
    std::vector<std::vector<Visit>> components(1);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool explicit_empty = false;
    for (;;) {
        skip_space();
        if (i >= text.size()) break;
        const char ch = text[i];
        if (ch == ';') {
            components.emplace_back();
            explicit_empty = false;
            ++i;
            continue;
        }
        if (ch == '(') {
            if (!components.back().empty() || explicit_empty) malformed(text, i, "misplaced \"()\"");
            ++i;
            skip_space();
            if (i >= text.size() || text[i] != ')') malformed(text, i, "expected ')'");
            ++i;
            explicit_empty = true;
            continue;
        }
        if (ch != 'O' && ch != 'U') malformed(text, i, std::string("unexpected character '") + ch + "'");
        if (explicit_empty) malformed(text, i, "token after \"()\"");
        const std::size_t start = i++;
        skip_space();
        long long label = 0;
        std::size_t digits = 0;
        while (i < text.size()) {
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                label = label * 10 + (text[i] - '0');
                if (label > 1'000'000'000) malformed(text, start, "label too large");
                ++digits;
                ++i;
            } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            } else {
                break;
            }
        }
        if (digits == 0) malformed(text, start, "missing crossing label");
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) malformed(text, start, "missing sign");
        const int sign = text[i] == '+' ? 1 : -1;
        ++i;
        components.back().push_back(
            {static_cast<int>(label), ch == 'O' ? Strand::over : Strand::under, sign});
    }
    return Diagram::from_components(std::move(components));
}

std::string serialize(const Diagram& d) {
    std::string out;
    bool first = true;
    for (const auto& comp : d.components()) {
        if (!first) out += ';';
        first = false;
        if (comp.empty()) out += "()";
        for (const Visit& v : comp) {
            out += v.strand == Strand::over ? 'O' : 'U';
            out += std::to_string(v.label);
            out += v.sign > 0 ? '+' : '-';
        }
    }
    return out;
}

Resolution resolve_state(const Diagram& d, StateBits state) {
    Resolution res;
    res.state = state;
    const int hcount = d.half_edge_count();
    res.circle_of_half_edge.assign(hcount, -1);
    int k = 0;
    for (HalfEdge h = 0; h < hcount; ++h) {
        if (res.circle_of_half_edge[h] >= 0) continue;
        HalfEdge x = h;
        while (res.circle_of_half_edge[x] < 0) {
            res.circle_of_half_edge[x] = k;
            res.circle_of_half_edge[x ^ 1] = k;
            const HalfEdge far = x ^ 1;
            x = d.smoothing_partner(far, (state >> d.crossing_of(far)) & 1U);
        }
        ++k;
    }
    res.circle_count = k + d.free_loop_count();
    return res;
}

Resolution resolve_state(const Diagram& d, const std::vector<bool>& alpha) {
    if (static_cast<int>(alpha.size()) != d.crossing_count())
        throw Error(ErrorKind::length_mismatch, "state has " + std::to_string(alpha.size()) +
                                                    " bits for " + std::to_string(d.crossing_count()) +
                                                    " crossings");
    if (alpha.size() > 63) throw Error(ErrorKind::length_mismatch, "at most 63 crossings supported");
    StateBits bits = 0;
    for (std::size_t m = 0; m < alpha.size(); ++m)
        if (alpha[m]) bits |= StateBits{1} << m;
    return resolve_state(d, bits);
}

std::vector<std::vector<int>> connected_components(const Diagram& d) {
    const int c = static_cast<int>(d.components().size());
    std::vector<int> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Crossing& x : d.crossings()) parent[find(x.over.component)] = find(x.under.component);
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < c; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : blocks) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Diagram& d) { return connected_components(d).size() == 1; }

SurfaceData trace_faces(const Diagram& d) {
    if (!is_connected(d))
        throw Error(ErrorKind::disconnected_diagram, "face tracing needs a connected diagram");
    SurfaceData s;
    const int hcount = d.half_edge_count();
    s.face_of_half_edge.assign(hcount, -1);
    for (HalfEdge h = 0; h < hcount; ++h) {
        if (s.face_of_half_edge[h] >= 0) continue;
        std::vector<HalfEdge> face;
        HalfEdge x = h;
        while (s.face_of_half_edge[x] < 0) {
            s.face_of_half_edge[x] = static_cast<int>(s.faces.size());
            face.push_back(x);
            const HalfEdge far = x ^ 1;
            x = d.rotation(d.crossing_of(far))[(d.slot_of(far) + 1) % 4];
        }
        s.faces.push_back(std::move(face));
    }
    for (int i = 0; i < d.free_loop_count(); ++i) s.faces.emplace_back();
    s.face_count = static_cast<int>(s.faces.size());
    // A crossing-free loop is taken as a disk: one face, genus zero.
    const int n = d.crossing_count();
    s.genus = n == 0 ? 0 : (n + 2 - s.face_count) / 2;
    if (n > 0 && (n + 2 - s.face_count) % 2 != 0)
        throw Error(ErrorKind::internal_invariant, "odd Euler characteristic");
    return s;
}

bool is_alternating(const Diagram& d) {
    for (const auto& comp : d.components()) {
        const std::size_t len = comp.size();
        for (std::size_t t = 0; t < len; ++t)
            if (comp[t].strand == comp[(t + 1) % len].strand) return false;
    }
    return true;
}

}  // namespace vkh
