#pragma once

// Reference implementations used only by tests.  None of them call into the
// library's elimination, face tracing or smoothing code.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/linalg.hpp"
#include "vkh/polynomial.hpp"

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_dense(const vkh::IntMatrix& m);

/// Rank by textbook Gaussian elimination over the rationals.
std::size_t naive_rank(QMatrix m);

/// Kernel basis from the reduced row echelon form.
std::vector<std::vector<mpq_class>> naive_kernel(QMatrix m, std::size_t cols);

/// Signature from the characteristic polynomial: for a real-rooted polynomial,
/// Descartes' sign count is exact and counts roots with multiplicity.
int descartes_signature(const std::vector<std::vector<long long>>& m);

/// dim F^k H^h for every k, from kernels and images restricted to levels >= k.
std::map<int, std::size_t> naive_filtered_dims(const vkh::FilteredComplex& c, int homdeg);

/// Circles of a state traced on Gauss-code arcs.  Smoothings are read from the
/// orientation alone: at each crossing the oriented splice joins in-end to
/// the other strand's out-end, the unoriented splice joins in to in and out to
/// out.  Bit m is oriented iff it equals 0 on a positive and 1 on a negative
/// crossing (crossings indexed by first appearance).
int circle_count(const vkh::Diagram& d, std::uint64_t state);

/// Sum over states of (-1)^(r - n-) q^(r + n+ - 2n-) (q + 1/q)^k.
vkh::LaurentPoly euler_state_sum(const vkh::Diagram& d);

/// One-component code with n chords.  Alternating codes put O on even
/// positions; otherwise O/U per chord are random.  Signs are uniform.
vkh::Diagram random_knot(std::mt19937_64& rng, int n, bool alternating);

/// Alternating code on `components` components (each nonempty), connected.
vkh::Diagram random_alternating_link(std::mt19937_64& rng, int n, int components);

/// Random connected checkerboard-colorable diagram with 1 <= crossings <= max_n:
/// alternating, then random or- and sc-moves, each kept only if colorability survives.
vkh::Diagram random_colorable(std::mt19937_64& rng, int max_n);

/// Random connected virtual diagram, colorability not required.
vkh::Diagram random_virtual(std::mt19937_64& rng, int max_n);

}  // namespace oracle
