#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "vkh/coloring.hpp"
#include "vkh/errors.hpp"

namespace oracle {

QMatrix to_dense(const vkh::IntMatrix& m) {
    QMatrix out(m.rows(), std::vector<mpq_class>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) out[r][e.index] = e.value;
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        mpq_class inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t naive_rank(QMatrix m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::vector<std::vector<mpq_class>> naive_kernel(QMatrix m, std::size_t cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

int descartes_signature(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 0;
    // Faddeev-LeVerrier: coeff[k] multiplies lambda^k in det(lambda I - A).
    QMatrix A(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = mpq_class(static_cast<long>(a[i][j]));
    std::vector<mpq_class> coeff(n + 1, 0);
    coeff[n] = 1;
    QMatrix M(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t j = 0; j < n; ++j) next[i][j] += A[i][l] * M[l][j];
        for (std::size_t i = 0; i < n; ++i) next[i][i] += coeff[n - k + 1];
        M = std::move(next);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        coeff[n - k] = -tr / static_cast<long>(k);
    }
    auto changes = [&](bool negate) {
        int count = 0, last = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            int s = sgn(coeff[k]);
            if (negate && k % 2 == 1) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

std::map<int, std::size_t> naive_filtered_dims(const vkh::FilteredComplex& c, int homdeg) {
    const int h = homdeg - c.min_degree;
    const auto& levels = c.levels.at(h);
    const std::size_t dim = levels.size();
    if (dim == 0) return {};

    std::vector<std::vector<mpq_class>> boundaries;
    if (h >= 1 && static_cast<std::size_t>(h - 1) < c.differentials.size()) {
        QMatrix in = to_dense(c.differentials[h - 1]);
        std::size_t src = c.differentials[h - 1].cols();
        for (std::size_t col = 0; col < src; ++col) {
            std::vector<mpq_class> v(dim, 0);
            for (std::size_t r = 0; r < dim; ++r) v[r] = in[r][col];
            boundaries.push_back(std::move(v));
        }
    }
    std::size_t base = boundaries.empty() ? 0 : naive_rank(boundaries);

    QMatrix out;
    if (static_cast<std::size_t>(h) < c.differentials.size()) out = to_dense(c.differentials[h]);

    int lo = *std::min_element(levels.begin(), levels.end());
    int hi = *std::max_element(levels.begin(), levels.end());
    std::map<int, std::size_t> dims;
    for (int k = lo; k <= hi + 1; ++k) {
        std::vector<std::size_t> keep;
        for (std::size_t g = 0; g < dim; ++g)
            if (levels[g] >= k) keep.push_back(g);
        QMatrix sub(out.size(), std::vector<mpq_class>(keep.size()));
        for (std::size_t r = 0; r < out.size(); ++r)
            for (std::size_t i = 0; i < keep.size(); ++i) sub[r][i] = out[r][keep[i]];
        std::vector<std::vector<mpq_class>> cycles;
        if (out.empty()) {
            for (auto g : keep) {
                std::vector<mpq_class> v(dim, 0);
                v[g] = 1;
                cycles.push_back(std::move(v));
            }
        } else {
            for (auto& z : naive_kernel(sub, keep.size())) {
                std::vector<mpq_class> v(dim, 0);
                for (std::size_t i = 0; i < keep.size(); ++i) v[keep[i]] = z[i];
                cycles.push_back(std::move(v));
            }
        }
        auto all = boundaries;
        all.insert(all.end(), cycles.begin(), cycles.end());
        dims[k] = (all.empty() ? 0 : naive_rank(all)) - base;
    }
    return dims;
}

int circle_count(const vkh::Diagram& d, std::uint64_t state) {
    const auto& comps = d.components();
    // Global visit ids and per-component offsets.
    std::vector<int> offset(comps.size() + 1, 0);
    for (std::size_t c = 0; c < comps.size(); ++c) offset[c + 1] = offset[c] + static_cast<int>(comps[c].size());
    const int visits = offset.back();

    // Node 2v is the in-end at visit v, 2v+1 the out-end.
    std::vector<int> parent(2 * visits);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::map<int, int> index;  // label -> crossing index by first appearance
    std::map<int, std::vector<int>> where;
    std::map<int, int> sign;
    int loops = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int len = static_cast<int>(comps[c].size());
        if (len == 0) ++loops;
        for (int p = 0; p < len; ++p) {
            const auto& v = comps[c][p];
            int id = offset[c] + p;
            if (!index.count(v.label)) index.emplace(v.label, static_cast<int>(index.size()));
            where[v.label].push_back(id);
            sign[v.label] = v.sign;
            unite(2 * id + 1, 2 * (offset[c] + (p + 1) % len));
        }
    }
    for (const auto& [label, ids] : where) {
        int bit = static_cast<int>((state >> index[label]) & 1);
        bool oriented = (sign[label] > 0) == (bit == 0);
        int a = ids[0], b = ids[1];
        if (oriented) {
            unite(2 * a, 2 * b + 1);
            unite(2 * b, 2 * a + 1);
        } else {
            unite(2 * a, 2 * b);
            unite(2 * a + 1, 2 * b + 1);
        }
    }
    int roots = 0;
    for (int x = 0; x < 2 * visits; ++x)
        if (find(x) == x) ++roots;
    return roots + loops;
}

vkh::LaurentPoly euler_state_sum(const vkh::Diagram& d) {
    const int n = d.crossing_count();
    vkh::LaurentPoly total;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int r = __builtin_popcountll(s);
        int k = circle_count(d, s);
        long long sign = ((r - d.n_minus()) % 2 == 0) ? 1 : -1;
        int shift = r + d.n_plus() - 2 * d.n_minus();
        // (q + 1/q)^k = sum_m C(k, m) q^(k - 2m)
        long long binom = 1;
        for (int m = 0; m <= k; ++m) {
            total[shift + k - 2 * m] += sign * binom;
            binom = binom * (k - m) / (m + 1);
        }
    }
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    return total;
}

namespace {

int random_sign(std::mt19937_64& rng) { return (rng() & 1) ? 1 : -1; }

}  // namespace

vkh::Diagram random_knot(std::mt19937_64& rng, int n, bool alternating) {
    std::vector<vkh::Visit> word(2 * n);
    if (alternating) {
        std::vector<int> odd(n);
        std::iota(odd.begin(), odd.end(), 0);
        std::shuffle(odd.begin(), odd.end(), rng);
        for (int x = 0; x < n; ++x) {
            int s = random_sign(rng);
            word[2 * x] = {x + 1, vkh::Strand::over, s};
            word[2 * odd[x] + 1] = {x + 1, vkh::Strand::under, s};
        }
    } else {
        std::vector<int> pos(2 * n);
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int x = 0; x < n; ++x) {
            int s = random_sign(rng);
            bool first_over = rng() & 1;
            word[pos[2 * x]] = {x + 1, first_over ? vkh::Strand::over : vkh::Strand::under, s};
            word[pos[2 * x + 1]] = {x + 1, first_over ? vkh::Strand::under : vkh::Strand::over, s};
        }
    }
    return vkh::Diagram::from_components({word});
}

vkh::Diagram random_alternating_link(std::mt19937_64& rng, int n, int components) {
    for (;;) {
        vkh::Diagram k = random_knot(rng, n, true);
        const auto& word = k.components()[0];
        // Cut the alternating word into even-length pieces so each stays alternating.
        std::vector<int> cuts;
        for (int p = 2; p < 2 * n; p += 2) cuts.push_back(p);
        std::shuffle(cuts.begin(), cuts.end(), rng);
        cuts.resize(components - 1);
        cuts.push_back(0);
        cuts.push_back(2 * n);
        std::sort(cuts.begin(), cuts.end());
        std::vector<std::vector<vkh::Visit>> comps;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            comps.emplace_back(word.begin() + cuts[i], word.begin() + cuts[i + 1]);
        vkh::Diagram d;
        try {
            d = vkh::Diagram::from_components(comps);
        } catch (const vkh::Error&) {
            continue;
        }
        if (vkh::is_connected(d)) return d;
    }
}

namespace {

vkh::Diagram flip(const vkh::Diagram& d, int label, bool swap_strands, bool flip_sign) {
    auto comps = d.components();
    for (auto& comp : comps)
        for (auto& v : comp) {
            if (v.label != label) continue;
            if (swap_strands) v.strand = v.strand == vkh::Strand::over ? vkh::Strand::under : vkh::Strand::over;
            if (flip_sign) v.sign = -v.sign;
        }
    return vkh::Diagram::from_components(comps);
}

bool colorable(const vkh::Diagram& d) {
    return vkh::find_checkerboard_coloring(d, vkh::trace_faces(d)).has_value();
}

}  // namespace

vkh::Diagram random_colorable(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    int comps = (n >= 2 && rng() % 4 == 0) ? 2 : 1;
    vkh::Diagram d = comps == 1 ? random_knot(rng, n, true) : random_alternating_link(rng, n, comps);
    for (const auto& x : std::vector<vkh::Crossing>(d.crossings())) {
        int kind = static_cast<int>(rng() % 3);
        if (kind == 2) continue;
        vkh::Diagram e = flip(d, x.label, kind == 0, kind == 1);
        if (colorable(e)) d = e;
    }
    return d;
}

vkh::Diagram random_virtual(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    return random_knot(rng, n, false);
}

}  // namespace oracle
