#pragma once

#include <optional>
#include <set>
#include <string>

#include "vkh/coloring.hpp"
#include "vkh/diagram.hpp"
#include "vkh/polynomial.hpp"

namespace vkh {

/// or: swap O and U at the crossing, keep its sign.  sc: flip the sign.  cc: both.
enum class MoveKind { or_move, sc, cc };

struct Move {
    MoveKind kind;
    int label;
};

const char* to_string(MoveKind kind);

/// Applies the move.  On colorable inputs also checks the effect on (sign, eta)
/// at every crossing against the expected table; throws InternalInvariant on a
/// mismatch and UnknownCrossing for a bad label.
Diagram apply_move(const Diagram& d, Move mv);

/// Move applied at every crossing.
Diagram apply_everywhere(const Diagram& d, MoveKind kind);

struct Mirrors {
    Diagram minus;        ///< every component reversed
    Diagram star;         ///< cc everywhere
    Diagram dagger;       ///< sc everywhere
    Diagram star_dagger;  ///< or everywhere
};

Mirrors mirrors(const Diagram& d);

/// or at every crossing with eta = -1.  The result is alternating.
Diagram alternatize(const Diagram& d, const Coloring& c);

/// (c + 2 - |s_0| - |s_1|) / 2 for a connected diagram of supporting genus 0.
/// Throws NotClassical.
int turaev_genus_diagram(const Diagram& d);

/// {-sigma_xi_star + 1 - 2k : k = 0..g+1}.  Throws InconsistentInputs unless
/// sigma_xi - sigma_xi_star = 2g.
std::set<int> support_lines(int sigma_xi, int sigma_xi_star, int g);

/// Every intercept j - 2i of p lies on a predicted line.
bool support_verdict(const KhPolynomial& p, int sigma_xi, int sigma_xi_star, int g);

struct GenusReport {
    int g_diagram = 0;
    std::string alt_code;
    int g_alt_diagram = 0;
    std::pair<int, int> alt_sigma_pair;  ///< (min, max) for the alternatization
    std::optional<int> g_turaev;         ///< classical inputs only
    std::set<int> support_lines;
    bool verdict = false;
};

/// Alternatizes with the given coloring and checks p against the lines predicted
/// from the alternatization.  Needs a connected colorable diagram.
GenusReport genus_report(const Diagram& d, const Coloring& c, const KhPolynomial& p);

}  // namespace vkh
