#include "vkh/lee.hpp"

#include <algorithm>
#include <bit>

#include "vkh/errors.hpp"

namespace vkh {

LeeComplex lee_complex(const Cube& cube) {
    if (cube.single_cycle_count() != 0)
        throw Error(ErrorKind::single_cycle_found, "Lee maps are only built on checkerboard cubes");
    for (const CubeEdge& e : cube.edges)
        if (e.twisted()) throw Error(ErrorKind::inconsistent_inputs, "Lee maps need undecorated edges");

    LeeComplex lee;
    const StateBits count = StateBits{1} << cube.n;
    const int lo = -cube.n_minus;
    const int degrees = cube.n + 1;
    lee.complex.min_degree = lo;
    lee.complex.levels.assign(degrees, {});
    lee.generators.assign(degrees, {});
    std::vector<std::vector<int>> local(count);
    for (StateBits s = 0; s < count; ++s) {
        const int h = homological_degree(cube, s) - lo;
        const int k = cube.vertices[s].circle_count;
        local[s].resize(std::size_t{1} << k);
        for (CircleMask m = 0; m < (CircleMask{1} << k); ++m) {
            local[s][m] = static_cast<int>(lee.generators[h].size());
            lee.generators[h].push_back({s, m});
            lee.complex.levels[h].push_back(quantum_degree(cube, s, m));
        }
    }
    lee.complex.differentials.reserve(degrees);
    for (int h = 0; h < degrees; ++h) {
        const std::size_t rows = h + 1 < degrees ? lee.generators[h + 1].size() : 0;
        IntMatrix d(rows, lee.generators[h].size());
        for (std::size_t col = 0; col < lee.generators[h].size(); ++col) {
            const Generator& g = lee.generators[h][col];
            const int from = lee.complex.levels[h][col];
            for (int m = 0; m < cube.n; ++m) {
                if ((g.state >> m) & 1U) continue;
                const CubeEdge& e = cube.edge(g.state, m);
                const StateBits t = e.target();
                apply_edge(e, g.mask, Algebra::lee, [&](CircleMask w, int c) {
                    const int to = quantum_degree(cube, t, w);
                    if (to != from && to != from + 4)
                        throw Error(ErrorKind::internal_invariant, "Lee differential shifts q-degree wrongly");
                    d.add(local[t][w], col, c);
                });
            }
        }
        lee.complex.differentials.push_back(std::move(d));
    }
    for (int h = 0; h + 1 < degrees; ++h) {
        const IntMatrix& a = lee.complex.differentials[h];
        const IntMatrix& b = lee.complex.differentials[h + 1];
        if (a.rows() == 0 || b.rows() == 0) continue;
        if (!multiply(b, a).is_zero()) throw Error(ErrorKind::internal_invariant, "(d')^2 != 0");
    }
    check_filtration(lee.complex);
    return lee;
}

std::size_t lee_dimension(const LeeComplex& lee) {
    std::size_t total = 0;
    for (const auto& [i, by_level] : filtered_image_dims_all(lee.complex))
        if (!by_level.empty()) total += by_level.begin()->second;
    return total;
}

RasmussenResult rasmussen(const Diagram& d) {
    if (d.components().size() != 1) throw Error(ErrorKind::not_a_knot, "Rasmussen invariant needs one component");
    const Cube cube = build_cube_source_sink(d);
    const LeeComplex lee = lee_complex(cube);
    const auto dims = filtered_image_dims_all(lee.complex);

    RasmussenResult r;
    for (const auto& [i, by_level] : dims) {
        if (by_level.empty()) continue;
        r.lee_dim += by_level.begin()->second;
        for (auto it = by_level.begin(); it != by_level.end(); ++it) {
            const auto next = std::next(it);
            const std::size_t above = next == by_level.end() ? 0 : next->second;
            const std::size_t jump = it->second - above;
            if (jump == 0) continue;
            r.e_infinity[{i, it->first}] = jump;
            for (std::size_t t = 0; t < jump; ++t) r.survivors.emplace_back(i, it->first);
        }
    }
    if (r.lee_dim != 2) throw Error(ErrorKind::internal_invariant, "Lee homology of a knot must be 2-dimensional");

    const auto h0 = dims.find(0);
    if (h0 == dims.end() || h0->second.empty())
        throw Error(ErrorKind::internal_invariant, "Lee homology vanishes in degree 0");
    bool have_max = false, have_min = false;
    for (const auto& [k, dim] : h0->second) {
        if (dim >= 1) {
            r.s_max = have_max ? std::max(r.s_max, k) : k;
            have_max = true;
        }
        if (dim == 2) {
            r.s_min = have_min ? std::max(r.s_min, k) : k;
            have_min = true;
        }
    }
    if (!have_max || !have_min || r.s_max - r.s_min != 2)
        throw Error(ErrorKind::internal_invariant, "s_max - s_min must be 2 for a knot");
    r.s = r.s_min + 1;
    return r;
}

int rasmussen_positive(const Diagram& d) {
    if (d.components().size() != 1) throw Error(ErrorKind::not_a_knot, "shortcut needs one component");
    for (const Crossing& x : d.crossings())
        if (x.sign < 0) throw Error(ErrorKind::not_positive, "diagram has a negative crossing");
    const int k = resolve_state(d, StateBits{0}).circle_count;
    return d.crossing_count() - k + 1;
}

int rasmussen_negative(const Diagram& d) {
    if (d.components().size() != 1) throw Error(ErrorKind::not_a_knot, "shortcut needs one component");
    for (const Crossing& x : d.crossings())
        if (x.sign > 0) throw Error(ErrorKind::not_negative, "diagram has a positive crossing");
    const int n = d.crossing_count();
    const StateBits all = n == 0 ? 0 : (StateBits{1} << n) - 1;
    const int k = resolve_state(d, all).circle_count;
    return k - n - 1;
}

}  // namespace vkh
