#include "vkh/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "vkh/errors.hpp"

namespace vkh {

void IntMatrix::add(std::size_t r, std::size_t c, const mpz_class& v) {
    if (v == 0) return;
    SparseVector& row = data_.at(r);
    if (c >= cols_) throw Error(ErrorKind::internal_invariant, "column index out of range");
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<int>(c),
                               [](const Entry& e, int i) { return e.index < i; });
    if (it != row.end() && it->index == static_cast<int>(c)) {
        it->value += v;
        if (it->value == 0) row.erase(it);
    } else {
        row.insert(it, Entry{static_cast<int>(c), v});
    }
}

mpz_class IntMatrix::at(std::size_t r, std::size_t c) const {
    const SparseVector& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<int>(c),
                               [](const Entry& e, int i) { return e.index < i; });
    return (it != row.end() && it->index == static_cast<int>(c)) ? it->value : mpz_class(0);
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& row : data_) total += row.size();
    return total;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (const Entry& e : data_[r]) t.data_[e.index].push_back(Entry{static_cast<int>(r), e.value});
    return t;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0) m.data_[r].push_back(Entry{static_cast<int>(c), mpz_class(rows[r][c])});
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::internal_invariant, "dimension mismatch in product");
    IntMatrix out(a.rows(), b.cols());
    std::vector<mpz_class> acc(b.cols());
    std::vector<int> touched;
    std::vector<char> mark(b.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        touched.clear();
        for (const Entry& ea : a.row(r)) {
            for (const Entry& eb : b.row(ea.index)) {
                if (!mark[eb.index]) {
                    mark[eb.index] = 1;
                    acc[eb.index] = 0;
                    touched.push_back(eb.index);
                }
                acc[eb.index] += ea.value * eb.value;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int c : touched) {
            mark[c] = 0;
            if (acc[c] != 0) out.add(r, c, acc[c]);
        }
    }
    return out;
}

namespace {

void make_primitive(SparseVector& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const Entry& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().value < 0) g = -g;
    if (g != 1)
        for (Entry& e : v) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

// s*v - t*w, dropping zeros.
SparseVector combine(const mpz_class& s, const SparseVector& v, const mpz_class& t, const SparseVector& w) {
    SparseVector out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].index < w[j].index)) {
            out.push_back(Entry{v[i].index, s * v[i].value});
            ++i;
        } else if (i == v.size() || w[j].index < v[i].index) {
            out.push_back(Entry{w[j].index, -t * w[j].value});
            ++j;
        } else {
            mpz_class x = s * v[i].value - t * w[j].value;
            if (x != 0) out.push_back(Entry{v[i].index, std::move(x)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool EchelonBasis::insert(SparseVector v) {
    make_primitive(v);
    while (!v.empty()) {
        const int lead = v.front().index;
        SparseVector& p = pivots_.at(lead);
        if (p.empty()) {
            p = std::move(v);
            ++rank_;
            return true;
        }
        const mpz_class g = gcd(v.front().value, p.front().value);
        const mpz_class s = p.front().value / g;
        const mpz_class t = v.front().value / g;
        v = combine(s, v, t, p);
        make_primitive(v);
    }
    return false;
}

std::size_t rank(const IntMatrix& m) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.rank();
}

std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (const Entry& e : m.row(r)) a[r][e.index] = e.value;

    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot(cols, 0);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        is_pivot[c] = 1;
        ++r;
    }

    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -a[i][f];
        mpz_class den = 1;
        for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
        std::vector<mpz_class> iv(cols);
        mpz_class g = 0;
        for (std::size_t k = 0; k < cols; ++k) {
            iv[k] = mpz_class(v[k] * den);
            g = gcd(g, iv[k]);
        }
        if (g > 1)
            for (auto& x : iv) x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

void check_filtration(const FilteredComplex& c) {
    for (std::size_t h = 0; h < c.differentials.size(); ++h) {
        const IntMatrix& d = c.differentials[h];
        if (h + 1 >= c.levels.size()) {
            if (!d.is_zero()) throw Error(ErrorKind::internal_invariant, "differential leaves the complex");
            continue;
        }
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (const Entry& e : d.row(r))
                if (c.levels[h + 1][r] < c.levels[h][e.index])
                    throw Error(ErrorKind::filtration_violation,
                                "entry lowers level " + std::to_string(c.levels[h][e.index]) + " to " +
                                    std::to_string(c.levels[h + 1][r]));
    }
}

namespace {

// Filtered Gaussian elimination: cancel differential entries between generators
// of equal level.  Both projections of such a cancellation respect the
// filtration, so the image dimensions of H(F^k) -> H are unchanged.
class ReducedComplex {
public:
    explicit ReducedComplex(const FilteredComplex& c) {
        check_filtration(c);
        offset_.push_back(0);
        for (std::size_t h = 0; h < c.levels.size(); ++h) {
            for (int level : c.levels[h]) gens_.push_back(Gen{static_cast<int>(h), level, true, {}, {}});
            offset_.push_back(static_cast<int>(gens_.size()));
        }
        for (std::size_t h = 0; h + 1 < c.levels.size() && h < c.differentials.size(); ++h) {
            const IntMatrix& d = c.differentials[h];
            for (std::size_t r = 0; r < d.rows(); ++r) {
                const int y = offset_[h + 1] + static_cast<int>(r);
                for (const Entry& e : d.row(r)) {
                    const int x = offset_[h] + e.index;
                    gens_[x].fwd.emplace(y, mpq_class(e.value));
                    gens_[y].back.emplace(x, mpq_class(e.value));
                }
            }
        }
        min_degree_ = c.min_degree;
        reduce();
    }

    std::map<int, std::size_t> dims(int homdeg, const std::vector<int>& original_levels) const {
        std::map<int, std::size_t> out;
        if (original_levels.empty()) return out;
        const int h = homdeg - min_degree_;
        const int lo = *std::min_element(original_levels.begin(), original_levels.end());
        const int hi = *std::max_element(original_levels.begin(), original_levels.end()) + 1;

        std::vector<int> here;
        for (int g = offset_[h]; g < offset_[h + 1]; ++g)
            if (gens_[g].alive) here.push_back(g);

        // rank of d restricted to generators with level >= k
        std::vector<int> by_desc = here;
        std::stable_sort(by_desc.begin(), by_desc.end(),
                         [&](int a, int b) { return gens_[a].level > gens_[b].level; });
        std::map<int, std::size_t> out_rank_ge;
        {
            EchelonBasis basis(gens_.size());
            std::size_t i = 0;
            for (int k = hi; k >= lo; --k) {
                while (i < by_desc.size() && gens_[by_desc[i]].level >= k) basis.insert(as_integer(gens_[by_desc[i++]].fwd));
                out_rank_ge[k] = basis.rank();
            }
        }
        // rank of the incoming differential projected onto generators with level < k
        std::vector<int> by_asc(by_desc.rbegin(), by_desc.rend());
        std::map<int, std::size_t> in_rank_lt;
        std::size_t in_rank_total = 0;
        {
            EchelonBasis basis(gens_.size());
            std::size_t i = 0;
            for (int k = lo; k <= hi; ++k) {
                while (i < by_asc.size() && gens_[by_asc[i]].level < k) basis.insert(as_integer(gens_[by_asc[i++]].back));
                in_rank_lt[k] = basis.rank();
            }
            while (i < by_asc.size()) basis.insert(as_integer(gens_[by_asc[i++]].back));
            in_rank_total = basis.rank();
        }
        for (int k = lo; k <= hi; ++k) {
            const std::size_t size = static_cast<std::size_t>(std::count_if(
                here.begin(), here.end(), [&](int g) { return gens_[g].level >= k; }));
            out[k] = size - out_rank_ge[k] - in_rank_total + in_rank_lt[k];
        }
        return out;
    }

private:
    struct Gen {
        int degree;
        int level;
        bool alive;
        std::map<int, mpq_class> fwd;
        std::map<int, mpq_class> back;
    };

    static SparseVector as_integer(const std::map<int, mpq_class>& v) {
        mpz_class den = 1;
        for (const auto& [i, x] : v) den = lcm(den, mpz_class(x.get_den()));
        SparseVector out;
        out.reserve(v.size());
        for (const auto& [i, x] : v) out.push_back(Entry{i, mpz_class(x * den)});
        return out;
    }

    void reduce() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int x = 0; x < static_cast<int>(gens_.size()); ++x) {
                if (!gens_[x].alive) continue;
                int best = -1;
                for (const auto& [y, v] : gens_[x].fwd) {
                    if (gens_[y].level != gens_[x].level) continue;
                    if (best < 0) best = y;
                    if (abs(v) == 1) {
                        best = y;
                        break;
                    }
                }
                if (best >= 0) {
                    cancel(x, best);
                    progress = true;
                }
            }
        }
    }

    void cancel(int x, int y) {
        const mpq_class c = gens_[x].fwd.at(y);
        std::vector<std::pair<int, mpq_class>> targets, sources;
        for (const auto& [w, b] : gens_[x].fwd)
            if (w != y) targets.emplace_back(w, b);
        for (const auto& [z, a] : gens_[y].back)
            if (z != x) sources.emplace_back(z, a);
        detach(x);
        detach(y);
        for (const auto& [z, a] : sources) {
            const mpq_class f = a / c;
            for (const auto& [w, b] : targets) {
                mpq_class& slot = gens_[z].fwd[w];
                slot -= f * b;
                if (slot == 0) {
                    gens_[z].fwd.erase(w);
                    gens_[w].back.erase(z);
                } else {
                    gens_[w].back[z] = slot;
                }
            }
        }
    }

    void detach(int g) {
        for (const auto& [z, a] : gens_[g].back) gens_[z].fwd.erase(g);
        for (const auto& [w, b] : gens_[g].fwd) gens_[w].back.erase(g);
        gens_[g].fwd.clear();
        gens_[g].back.clear();
        gens_[g].alive = false;
    }

    std::vector<Gen> gens_;
    std::vector<int> offset_;
    int min_degree_ = 0;
};

}  // namespace

std::map<int, std::size_t> filtered_image_dims(const FilteredComplex& c, int homdeg) {
    const int h = homdeg - c.min_degree;
    if (h < 0 || h >= static_cast<int>(c.levels.size())) return {};
    return ReducedComplex(c).dims(homdeg, c.levels[h]);
}

std::map<int, std::map<int, std::size_t>> filtered_image_dims_all(const FilteredComplex& c) {
    ReducedComplex reduced(c);
    std::map<int, std::map<int, std::size_t>> out;
    for (std::size_t h = 0; h < c.levels.size(); ++h)
        out[c.min_degree + static_cast<int>(h)] = reduced.dims(c.min_degree + static_cast<int>(h), c.levels[h]);
    return out;
}

}  // namespace vkh
