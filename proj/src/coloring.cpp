#include "vkh/coloring.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "vkh/errors.hpp"

namespace vkh {

namespace {

Color flip(Color c) { return c == Color::white ? Color::black : Color::white; }

StateBits boundary_bits(const std::vector<int>& eta) {
    StateBits bits = 0;
    for (std::size_t m = 0; m < eta.size(); ++m)
        if (eta[m] < 0) bits |= StateBits{1} << m;
    return bits;
}

void fill_derived(Coloring& c, const Diagram& d, const SurfaceData& s) {
    c.white_faces.clear();
    for (int f = 0; f < static_cast<int>(c.color.size()); ++f)
        if (c.color[f] == Color::white) c.white_faces.push_back(f);
    c.eta.assign(d.crossing_count(), 0);
    for (int x = 0; x < d.crossing_count(); ++x) {
        const int corner01 = s.face_of_half_edge[d.rotation(x)[1]];
        c.eta[x] = c.color[corner01] == Color::white ? 1 : -1;
    }
    c.boundary_state = boundary_bits(c.eta);
}

}  // namespace

std::optional<Coloring> find_checkerboard_coloring(const Diagram& d, const SurfaceData& s) {
    const int faces = s.face_count;
    std::vector<std::vector<int>> adj(faces);
    for (int e = 0; e < d.edge_count(); ++e) {
        const int a = s.face_of_half_edge[2 * e];
        const int b = s.face_of_half_edge[2 * e + 1];
        if (a == b) return std::nullopt;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> col(faces, -1);
    for (int start = 0; start < faces; ++start) {
        if (col[start] >= 0) continue;
        col[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (int g : adj[f]) {
                if (col[g] < 0) {
                    col[g] = 1 - col[f];
                    stack.push_back(g);
                } else if (col[g] == col[f]) {
                    return std::nullopt;
                }
            }
        }
    }
    Coloring c;
    c.color.resize(faces);
    for (int f = 0; f < faces; ++f) c.color[f] = col[f] == 0 ? Color::white : Color::black;
    fill_derived(c, d, s);
    return c;
}

Coloring dual(const Coloring& c, const Diagram& d) {
    Coloring out = c;
    for (auto& col : out.color) col = flip(col);
    out.white_faces.clear();
    for (int f = 0; f < static_cast<int>(out.color.size()); ++f)
        if (out.color[f] == Color::white) out.white_faces.push_back(f);
    for (auto& e : out.eta) e = -e;
    out.boundary_state = boundary_bits(out.eta);
    out.is_dual = !c.is_dual;
    (void)d;
    return out;
}

GoeritzData goeritz(const Diagram& d, const SurfaceData& s, const Coloring& c) {
    GoeritzData g;
    const std::size_t m = c.white_faces.size();
    std::vector<int> pos(c.color.size(), -1);
    for (std::size_t i = 0; i < m; ++i) pos[c.white_faces[i]] = static_cast<int>(i);
    g.pre_goeritz.assign(m, std::vector<long long>(m, 0));
    g.type.assign(d.crossing_count(), 0);
    for (int x = 0; x < d.crossing_count(); ++x) {
        std::vector<int> white;
        for (int p = 0; p < 4; ++p) {
            const int f = s.face_of_half_edge[d.rotation(x)[(p + 1) % 4]];
            if (c.color[f] == Color::white) white.push_back(pos[f]);
        }
        if (white.size() != 2) throw Error(ErrorKind::internal_invariant, "crossing without two white corners");
        const int eta = c.eta[x];
        if (white[0] != white[1]) {
            g.pre_goeritz[white[0]][white[1]] -= eta;
            g.pre_goeritz[white[1]][white[0]] -= eta;
        }
        const int sign = d.crossings()[x].sign;
        g.type[x] = sign * eta == 1 ? 2 : 1;
        if (g.type[x] == 2) g.mu += eta;
    }
    for (std::size_t i = 0; i < m; ++i) {
        long long off = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (k != i) off += g.pre_goeritz[i][k];
        g.pre_goeritz[i][i] = -off;
    }
    if (m > 0) {
        g.goeritz.assign(m - 1, std::vector<long long>(m - 1));
        for (std::size_t i = 1; i < m; ++i)
            for (std::size_t k = 1; k < m; ++k) g.goeritz[i - 1][k - 1] = g.pre_goeritz[i][k];
    }
    g.sigma = symmetric_signature(g.goeritz) - g.mu;
    return g;
}

std::pair<int, int> signature_pair(const Diagram& d, const SurfaceData& s, const Coloring& c) {
    return {goeritz(d, s, c).sigma, goeritz(d, s, dual(c, d)).sigma};
}

std::pair<int, int> normalized_pair(std::pair<int, int> p) {
    return {std::min(p.first, p.second), std::max(p.first, p.second)};
}

int symmetric_signature(const SymMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorKind::not_symmetric, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (m[i][k] != m[k][i]) throw Error(ErrorKind::not_symmetric, "matrix is not symmetric");

    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) a[i][k] = static_cast<long>(m[i][k]);
    std::vector<char> done(n, 0);
    int sig = 0;

    // Schur complement with respect to the pivot block on `piv`.
    auto eliminate_one = [&](std::size_t p) {
        const mpq_class d = a[p][p];
        sig += d > 0 ? 1 : -1;
        done[p] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            const mpq_class f = a[i][p] / d;
            for (std::size_t k = 0; k < n; ++k)
                if (!done[k]) a[i][k] -= f * a[p][k];
        }
    };

    for (;;) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && a[i][i] != 0) p = i;
        if (p < n) {
            eliminate_one(p);
            continue;
        }
        std::size_t pi = n, pk = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t k = i + 1; k < n; ++k)
                if (!done[i] && !done[k] && a[i][k] != 0) {
                    pi = i;
                    pk = k;
                    break;
                }
        if (pi == n) break;
        // Zero diagonal with a nonzero off-diagonal entry: replacing row/column
        // pi by pi + pk makes the diagonal 2*a[pi][pk] != 0.  Congruence keeps
        // the signature.
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k]) a[pi][k] += a[pk][k];
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) a[i][pi] += a[i][pk];
        eliminate_one(pi);
    }
    return sig;
}

std::pair<Resolution, Resolution> boundary_states(const Diagram& d, const SurfaceData& s, const Coloring& c) {
    const int n = d.crossing_count();
    const StateBits all = n == 0 ? 0 : (n >= 64 ? ~StateBits{0} : (StateBits{1} << n) - 1);
    Resolution a = resolve_state(d, c.boundary_state);
    Resolution b = resolve_state(d, ~c.boundary_state & all);

    std::multiset<std::set<int>> circles, faces;
    for (const Resolution* r : {&a, &b}) {
        std::vector<std::set<int>> edges(r->circle_count - d.free_loop_count());
        for (HalfEdge h = 0; h < d.half_edge_count(); ++h) edges[r->circle_of_half_edge[h]].insert(h >> 1);
        circles.insert(edges.begin(), edges.end());
    }
    for (const auto& f : s.faces) {
        if (f.empty()) continue;
        std::set<int> edges;
        for (HalfEdge h : f) edges.insert(h >> 1);
        faces.insert(edges);
    }
    if (circles != faces) throw Error(ErrorKind::internal_invariant, "boundary states do not trace the faces");
    return {std::move(a), std::move(b)};
}

}  // namespace vkh
