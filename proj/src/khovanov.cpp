#include "vkh/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>

#include "vkh/errors.hpp"

namespace vkh {

namespace {

constexpr int max_cube_crossings = 20;
constexpr int max_state_circles = 31;

StateBits full_state(int n) { return n == 0 ? 0 : (StateBits{1} << n) - 1; }

void require_cube_size(const Diagram& d) {
    if (!is_connected(d))
        throw Error(ErrorKind::disconnected_diagram, "the cube needs a connected diagram");
    if (d.crossing_count() > max_cube_crossings)
        throw Error(ErrorKind::inconsistent_inputs, "too many crossings for the cube of resolutions");
}

// Circles and edge data shared by both builders.
Cube skeleton(const Diagram& d, BuilderKind builder) {
    Cube cube;
    cube.n = d.crossing_count();
    cube.n_plus = d.n_plus();
    cube.n_minus = d.n_minus();
    cube.builder = builder;
    const StateBits count = StateBits{1} << cube.n;
    cube.vertices.reserve(count);
    for (StateBits s = 0; s < count; ++s) {
        cube.vertices.push_back(resolve_state(d, s));
        if (cube.vertices.back().circle_count > max_state_circles)
            throw Error(ErrorKind::inconsistent_inputs, "state with too many circles");
    }
    cube.edge_index.assign(count * cube.n, -1);
    for (StateBits s = 0; s < count; ++s) {
        for (int m = 0; m < cube.n; ++m) {
            if ((s >> m) & 1U) continue;
            const Resolution& src = cube.vertices[s];
            const Resolution& tgt = cube.vertices[s | (StateBits{1} << m)];
            const auto& rot = d.rotation(m);
            CubeEdge e;
            e.source = s;
            e.bit = m;
            e.sign = bar_natan_sign(s, m);
            const int s0 = src.circle_of_half_edge[rot[0]], s2 = src.circle_of_half_edge[rot[2]];
            const int t1 = tgt.circle_of_half_edge[rot[1]], t3 = tgt.circle_of_half_edge[rot[3]];
            if (s0 != s2 && t1 == t3) {
                e.kind = EdgeKind::merge;
                e.source_circles = {s0, s2};
                e.target_circles = {t1, -1};
            } else if (s0 == s2 && t1 != t3) {
                e.kind = EdgeKind::split;
                e.source_circles = {s0, -1};
                e.target_circles = {t1, t3};
            } else if (s0 == s2 && t1 == t3) {
                e.kind = EdgeKind::single_cycle;
                e.source_circles = {s0, -1};
                e.target_circles = {t1, -1};
            } else {
                throw Error(ErrorKind::internal_invariant, "edge changes circle count by two");
            }
            e.carry.assign(src.circle_count, -1);
            e.carry_twist.assign(src.circle_count, false);
            for (HalfEdge h = 0; h < d.half_edge_count(); ++h) {
                const int c = src.circle_of_half_edge[h];
                if (c == e.source_circles[0] || c == e.source_circles[1]) continue;
                e.carry[c] = tgt.circle_of_half_edge[h];
            }
            // Free loops sit after the traced circles in both states.
            for (int f = 0; f < d.free_loop_count(); ++f)
                e.carry[src.circle_count - 1 - f] = tgt.circle_count - 1 - f;
            cube.edge_index[s * cube.n + m] = static_cast<int>(cube.edges.size());
            cube.edges.push_back(std::move(e));
        }
    }
    return cube;
}

// Canonical traversal of every circle of a state: starting at its smallest
// half-edge, leave through that end and follow the smoothing.
struct Traversal {
    std::vector<bool> arrives;   // the traversal enters a crossing through h
    std::vector<int> direction;  // per edge: +1 tail -> head, -1 otherwise
};

Traversal traverse(const Diagram& d, StateBits state) {
    Traversal t;
    const int hcount = d.half_edge_count();
    t.arrives.assign(hcount, false);
    t.direction.assign(d.edge_count(), 0);
    std::vector<bool> seen(hcount, false);
    for (HalfEdge h = 0; h < hcount; ++h) {
        if (seen[h]) continue;
        HalfEdge x = h;
        do {
            seen[x] = seen[x ^ 1] = true;
            t.direction[x >> 1] = (x % 2 == 0) ? 1 : -1;
            t.arrives[x ^ 1] = true;
            x = d.smoothing_partner(x ^ 1, (state >> d.crossing_of(x ^ 1)) & 1U);
        } while (x != h);
    }
    return t;
}

class GeneralBuilder {
public:
    explicit GeneralBuilder(const Diagram& d) : d_(d), cube_(skeleton(d, BuilderKind::general)) {
        const StateBits count = StateBits{1} << cube_.n;
        traversals_.reserve(count);
        for (StateBits s = 0; s < count; ++s) traversals_.push_back(traverse(d, s));
    }

    Cube build() {
        orient();
        for (CubeEdge& e : cube_.edges) decorate(e);
        solve_signs();
        return std::move(cube_);
    }

private:
    // Decoration of the arc through half-edge a in state s: +1 when the oriented
    // circle enters the crossing through slot 0 or 2.
    int decoration(StateBits s, HalfEdge a) const {
        const HalfEdge b = d_.smoothing_partner(a, (s >> d_.crossing_of(a)) & 1U);
        const HalfEdge entry = traversals_[s].arrives[a] ? a : b;
        const int base = d_.slot_of(entry) % 2 == 0 ? 1 : -1;
        return base * cube_.orientation[s][cube_.vertices[s].circle_of_half_edge[a]];
    }

    void orient() {
        const StateBits count = StateBits{1} << cube_.n;
        cube_.orientation.assign(count, {});
        const StateBits root = full_state(cube_.n);
        cube_.orientation[root].assign(cube_.vertices[root].circle_count, 1);
        std::deque<StateBits> queue{root};
        while (!queue.empty()) {
            const StateBits p = queue.front();
            queue.pop_front();
            for (int m = 0; m < cube_.n; ++m) {
                if (!((p >> m) & 1U)) continue;
                const StateBits t = p & ~(StateBits{1} << m);
                if (!cube_.orientation[t].empty()) continue;
                orient_child(t, p, m);
                queue.push_back(t);
            }
        }
    }

    void orient_child(StateBits t, StateBits p, int m) {
        const Resolution& rt = cube_.vertices[t];
        const Resolution& rp = cube_.vertices[p];
        auto& o = cube_.orientation[t];
        o.assign(rt.circle_count, 0);
        const auto& rot = d_.rotation(m);
        // Circles through crossing m get the orientation that decorates their
        // arc there with +.
        for (int slot : {0, 2}) {
            const int c = rt.circle_of_half_edge[rot[slot]];
            if (o[c] != 0) continue;
            o[c] = 1;
            if (decoration(t, rot[slot]) < 0) o[c] = -1;
        }
        // Other circles keep the direction of the matching parent circle.
        for (HalfEdge h = 0; h < d_.half_edge_count(); h += 2) {
            const int c = rt.circle_of_half_edge[h];
            if (o[c] != 0) continue;
            const int e = h >> 1;
            o[c] = traversals_[t].direction[e] * traversals_[p].direction[e] *
                   cube_.orientation[p][rp.circle_of_half_edge[h]];
        }
        for (int& v : o)
            if (v == 0) v = 1;
    }

    void decorate(CubeEdge& e) {
        if (e.kind == EdgeKind::single_cycle) return;
        const StateBits s = e.source, t = e.target();
        const auto& rot = d_.rotation(e.bit);
        const Resolution& rs = cube_.vertices[s];
        const Resolution& rt = cube_.vertices[t];
        if (e.kind == EdgeKind::merge) {
            e.source_twist = {decoration(s, rot[0]) < 0, decoration(s, rot[2]) < 0};
            const int d1 = decoration(t, rot[1]), d3 = decoration(t, rot[3]);
            if (d1 != d3) throw Error(ErrorKind::internal_invariant, "merge target decorations differ");
            e.target_twist = {d1 < 0, false};
        } else {
            const int d0 = decoration(s, rot[0]), d2 = decoration(s, rot[2]);
            if (d0 != d2) throw Error(ErrorKind::internal_invariant, "split source decorations differ");
            e.source_twist = {d0 < 0, false};
            e.target_twist = {decoration(t, rot[1]) < 0, decoration(t, rot[3]) < 0};
        }
        for (HalfEdge h = 0; h < d_.half_edge_count(); h += 2) {
            const int c = rs.circle_of_half_edge[h];
            if (e.carry[c] < 0) continue;
            const int edge = h >> 1;
            const int rel = traversals_[s].direction[edge] * cube_.orientation[s][c] *
                            traversals_[t].direction[edge] * cube_.orientation[t][rt.circle_of_half_edge[h]];
            e.carry_twist[c] = rel < 0;
        }
    }

    using Image = std::map<CircleMask, long long>;

    Image compose(const CubeEdge& first, const CubeEdge& second, CircleMask mask) const {
        Image mid, out;
        apply_edge(first, mask, Algebra::khovanov, [&](CircleMask m, int c) { mid[m] += c; });
        for (const auto& [m, c] : mid) {
            if (c == 0) continue;
            apply_edge(second, m, Algebra::khovanov, [&](CircleMask w, int c2) { out[w] += c * c2; });
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    void solve_signs() {
        const std::size_t edges = cube_.edges.size();
        const std::size_t words = (edges + 64) / 64;  // last bit column holds the right-hand side
        const std::size_t rhs_bit = edges;
        std::vector<std::vector<std::uint64_t>> pivot(edges);
        for (auto& e : cube_.edges) e.sign = 1;

        auto insert = [&](std::vector<std::uint64_t> row) {
            for (;;) {
                std::size_t lead = edges;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t bits = row[w];
                    if (w == rhs_bit / 64) bits &= ~(std::uint64_t{1} << (rhs_bit % 64));
                    if (bits) {
                        lead = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        break;
                    }
                }
                if (lead == edges) {
                    if ((row[rhs_bit / 64] >> (rhs_bit % 64)) & 1U)
                        throw Error(ErrorKind::internal_invariant, "no consistent edge signs");
                    return;
                }
                if (pivot[lead].empty()) {
                    pivot[lead] = std::move(row);
                    return;
                }
                for (std::size_t w = 0; w < words; ++w) row[w] ^= pivot[lead][w];
            }
        };

        const StateBits count = StateBits{1} << cube_.n;
        for (StateBits s = 0; s < count; ++s) {
            for (int a = 0; a < cube_.n; ++a) {
                if ((s >> a) & 1U) continue;
                for (int b = a + 1; b < cube_.n; ++b) {
                    if ((s >> b) & 1U) continue;
                    const StateBits sa = s | (StateBits{1} << a), sb = s | (StateBits{1} << b);
                    const std::array<int, 4> path{cube_.edge_index[s * cube_.n + a], cube_.edge_index[sa * cube_.n + b],
                                                  cube_.edge_index[s * cube_.n + b], cube_.edge_index[sb * cube_.n + a]};
                    std::optional<int> relation;  // +1: composites equal, -1: opposite
                    bool any = false;
                    for (CircleMask mask = 0; mask < (CircleMask{1} << cube_.vertices[s].circle_count); ++mask) {
                        const Image p1 = compose(cube_.edges[path[0]], cube_.edges[path[1]], mask);
                        const Image p2 = compose(cube_.edges[path[2]], cube_.edges[path[3]], mask);
                        if (p1.empty() && p2.empty()) continue;
                        any = true;
                        Image neg = p2;
                        for (auto& kv : neg) kv.second = -kv.second;
                        int rel = 0;
                        if (p1 == p2) rel = 1;
                        else if (p1 == neg) rel = -1;
                        if (rel == 0 || (relation && *relation != rel))
                            throw Error(ErrorKind::internal_invariant, "square with incompatible composites");
                        relation = rel;
                    }
                    if (!any) continue;
                    std::vector<std::uint64_t> row(words, 0);
                    for (int idx : path) row[idx / 64] ^= std::uint64_t{1} << (idx % 64);
                    // Product of the four signs must be -1 when the composites agree.
                    if (*relation == 1) row[rhs_bit / 64] |= std::uint64_t{1} << (rhs_bit % 64);
                    insert(std::move(row));
                }
            }
        }

        std::vector<int> value(edges, 0);
        for (std::size_t q = edges; q-- > 0;) {
            if (pivot[q].empty()) {
                const CubeEdge& e = cube_.edges[q];
                value[q] = bar_natan_sign(e.source, e.bit) < 0 ? 1 : 0;
                continue;
            }
            int v = static_cast<int>((pivot[q][rhs_bit / 64] >> (rhs_bit % 64)) & 1U);
            for (std::size_t r = q + 1; r < edges; ++r)
                if ((pivot[q][r / 64] >> (r % 64)) & 1U) v ^= value[r];
            value[q] = v;
        }
        for (std::size_t q = 0; q < edges; ++q) cube_.edges[q].sign = value[q] ? -1 : 1;
    }

    const Diagram& d_;
    Cube cube_;
    std::vector<Traversal> traversals_;
};

int popcount(CircleMask m) { return std::popcount(m); }

}  // namespace

bool CubeEdge::twisted() const {
    if (source_twist[0] || source_twist[1] || target_twist[0] || target_twist[1]) return true;
    return std::any_of(carry_twist.begin(), carry_twist.end(), [](bool b) { return b; });
}

const CubeEdge& Cube::edge(StateBits source, int bit) const {
    const int idx = edge_index.at(source * n + bit);
    if (idx < 0) throw Error(ErrorKind::internal_invariant, "no such cube edge");
    return edges[idx];
}

std::size_t Cube::single_cycle_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [](const CubeEdge& e) { return e.kind == EdgeKind::single_cycle; }));
}

int bar_natan_sign(StateBits state, int bit) {
    const StateBits below = state & ((StateBits{1} << bit) - 1);
    return std::popcount(below) % 2 ? -1 : 1;
}

Cube build_cube_source_sink(const Diagram& d, const Coloring& c) {
    (void)c;
    require_cube_size(d);
    Cube cube = skeleton(d, BuilderKind::source_sink);
    if (cube.single_cycle_count() != 0)
        throw Error(ErrorKind::single_cycle_found, "single cycle smoothing on a checkerboard diagram");
    return cube;
}

Cube build_cube_source_sink(const Diagram& d) {
    require_cube_size(d);
    const SurfaceData s = trace_faces(d);
    const auto c = find_checkerboard_coloring(d, s);
    if (!c) throw Error(ErrorKind::not_colorable, "diagram is not checkerboard colorable");
    return build_cube_source_sink(d, *c);
}

Cube build_cube_general(const Diagram& d) {
    require_cube_size(d);
    return GeneralBuilder(d).build();
}

void apply_edge(const CubeEdge& e, CircleMask mask, Algebra algebra,
                const std::function<void(CircleMask, int)>& emit) {
    if (e.kind == EdgeKind::single_cycle) return;
    auto theta = [](bool twist, unsigned bit) { return (twist && bit) ? -1 : 1; };
    CircleMask base = 0;
    int coef = e.sign;
    for (std::size_t c = 0; c < e.carry.size(); ++c) {
        if (e.carry[c] < 0) continue;
        const unsigned bit = (mask >> c) & 1U;
        coef *= theta(e.carry_twist[c], bit);
        if (bit) base |= CircleMask{1} << e.carry[c];
    }
    if (e.kind == EdgeKind::merge) {
        const unsigned va = (mask >> e.source_circles[0]) & 1U;
        const unsigned vb = (mask >> e.source_circles[1]) & 1U;
        coef *= theta(e.source_twist[0], va) * theta(e.source_twist[1], vb);
        unsigned out = va | vb;
        if (va && vb) {
            if (algebra == Algebra::khovanov) return;
            out = 0;  // m'(X X) = 1
        }
        coef *= theta(e.target_twist[0], out);
        emit(base | (out ? CircleMask{1} << e.target_circles[0] : 0), coef);
        return;
    }
    const unsigned v = (mask >> e.source_circles[0]) & 1U;
    coef *= theta(e.source_twist[0], v);
    auto put = [&](unsigned xa, unsigned xb) {
        const int c = coef * theta(e.target_twist[0], xa) * theta(e.target_twist[1], xb);
        CircleMask m = base;
        if (xa) m |= CircleMask{1} << e.target_circles[0];
        if (xb) m |= CircleMask{1} << e.target_circles[1];
        emit(m, c);
    };
    if (v) {
        put(1, 1);
        if (algebra == Algebra::lee) put(0, 0);  // Delta'(X) = 1 1 + X X
    } else {
        put(1, 0);
        put(0, 1);
    }
}

int homological_degree(const Cube& cube, StateBits state) {
    return std::popcount(state) - cube.n_minus;
}

int quantum_degree(const Cube& cube, StateBits state, CircleMask mask) {
    const int k = cube.vertices[state].circle_count;
    const int x = popcount(mask);
    return (k - 2 * x) + std::popcount(state) + cube.n_plus - 2 * cube.n_minus;
}

BigradedComplex khovanov_complex(const Cube& cube) {
    BigradedComplex out;
    const StateBits count = StateBits{1} << cube.n;
    std::vector<std::vector<int>> local(count);
    for (StateBits s = 0; s < count; ++s) {
        const int k = cube.vertices[s].circle_count;
        local[s].resize(std::size_t{1} << k);
        const int i = homological_degree(cube, s);
        for (CircleMask m = 0; m < (CircleMask{1} << k); ++m) {
            auto& block = out.generators[{i, quantum_degree(cube, s, m)}];
            local[s][m] = static_cast<int>(block.size());
            block.push_back({s, m});
        }
    }
    for (const auto& [ij, gens] : out.generators) {
        const auto next = out.generators.find({ij.first + 1, ij.second});
        const std::size_t rows = next == out.generators.end() ? 0 : next->second.size();
        IntMatrix d(rows, gens.size());
        for (std::size_t col = 0; col < gens.size(); ++col) {
            const Generator& g = gens[col];
            for (int m = 0; m < cube.n; ++m) {
                if ((g.state >> m) & 1U) continue;
                const CubeEdge& e = cube.edge(g.state, m);
                const StateBits t = e.target();
                apply_edge(e, g.mask, Algebra::khovanov, [&](CircleMask w, int c) {
                    if (rows == 0) throw Error(ErrorKind::internal_invariant, "differential changes q-degree");
                    d.add(local[t][w], col, c);
                });
            }
        }
        out.differentials.emplace(ij, std::move(d));
    }
    return out;
}

void check_d_squared(const BigradedComplex& c) {
    for (const auto& [ij, d] : c.differentials) {
        const auto next = c.differentials.find({ij.first + 1, ij.second});
        if (next == c.differentials.end() || next->second.cols() == 0 || d.rows() == 0) continue;
        if (!multiply(next->second, d).is_zero())
            throw Error(ErrorKind::internal_invariant,
                        "d^2 != 0 at (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
}

std::map<int, std::size_t> chain_dimensions(const Cube& cube) {
    std::map<int, std::size_t> out;
    for (StateBits s = 0; s < (StateBits{1} << cube.n); ++s)
        out[homological_degree(cube, s)] += std::size_t{1} << cube.vertices[s].circle_count;
    return out;
}

KhPolynomial khovanov_homology(const Cube& cube) {
    const BigradedComplex c = khovanov_complex(cube);
    check_d_squared(c);
    std::map<std::pair<int, int>, std::size_t> ranks;
    for (const auto& [ij, d] : c.differentials) ranks[ij] = rank(d);
    KhPolynomial p;
    for (const auto& [ij, gens] : c.generators) {
        const auto prev = ranks.find({ij.first - 1, ij.second});
        const std::size_t in = prev == ranks.end() ? 0 : prev->second;
        const long long dim = static_cast<long long>(gens.size() - ranks[ij] - in);
        if (dim != 0) p[ij] = dim;
    }
    return p;
}

KhPolynomial khovanov_polynomial(const Diagram& d) {
    require_cube_size(d);
    const SurfaceData s = trace_faces(d);
    if (const auto c = find_checkerboard_coloring(d, s)) return khovanov_homology(build_cube_source_sink(d, *c));
    return khovanov_homology(build_cube_general(d));
}

}  // namespace vkh
