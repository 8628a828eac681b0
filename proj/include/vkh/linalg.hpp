#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace vkh {

struct Entry {
    int index;
    mpz_class value;
};

/// Sorted by index, no zero values.
using SparseVector = std::vector<Entry>;

/// Sparse row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }

    /// Adds v to entry (r, c); entries that cancel to zero are dropped.
    void add(std::size_t r, std::size_t c, const mpz_class& v);
    mpz_class at(std::size_t r, std::size_t c) const;

    const SparseVector& row(std::size_t r) const { return data_[r]; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    IntMatrix transpose() const;

    static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Incremental row echelon form over the integers.  Each inserted vector is
/// reduced fraction-free against the stored pivot rows and divided by its
/// content, so entries stay small on cube differentials.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : pivots_(dim) {}

    /// Returns true if v was independent of the vectors inserted so far.
    bool insert(SparseVector v);
    std::size_t rank() const { return rank_; }

private:
    std::vector<SparseVector> pivots_;
    std::size_t rank_ = 0;
};

std::size_t rank(const IntMatrix& m);

/// Integer basis of the rational kernel {x : M x = 0}, each vector primitive.
std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& m);

/// Chain complex with a filtration level on every generator.  differentials[h]
/// maps degree min_degree + h to the next degree (rows index targets).
struct FilteredComplex {
    int min_degree = 0;
    std::vector<std::vector<int>> levels;
    std::vector<IntMatrix> differentials;

    int max_degree() const { return min_degree + static_cast<int>(levels.size()) - 1; }
};

/// Throws FiltrationViolation if some differential entry lowers the level.
void check_filtration(const FilteredComplex& c);

/// dim of the image of H(F^k C) -> H(C) in degree homdeg, for every k from the
/// lowest generator level up to one past the highest.
std::map<int, std::size_t> filtered_image_dims(const FilteredComplex& c, int homdeg);

/// Same for every degree, sharing one reduction of the complex.
std::map<int, std::map<int, std::size_t>> filtered_image_dims_all(const FilteredComplex& c);

}  // namespace vkh
