#pragma once

// Riemann-Roch bookkeeping: Euler characteristics of line bundles and
// twisted ideal sheaves, the dimension of the moduli space of stable
// rank-r bundles, and the expected dimension rho of Brill-Noether loci.

#include <optional>
#include <variant>

#include "ruled/lattice.hpp"

namespace ruled {

struct ChernData {
    Int r;        // rank; classification paths fix r = 2
    NumClass c1;
    Int c2;
};

/// chi O_X(d) = (1-g) + d.(d-K)/2.  The pairing d.(d-K) is always even.
Int chi_line(const NumClass& d, const RuledSurface& s);

/// chi I_Z(d) = chi O_X(d) - |Z|.
Int chi_ideal_twist(const NumClass& d, const Int& zlen, const RuledSurface& s);

/// chi(r; c1, c2) = r(1-g) - c1.K/2 + c1^2/2 - c2.
Int chi_rank2(const ChernData& c, const RuledSurface& s);

/// dim M_H(r; c1, c2) = 2r*c2 - (r-1)*c1^2 - (r^2-1)(1-g), valid for
/// c2 >> 0; callers tag results as asymptotic.
Int moduli_dim(const ChernData& c, const RuledSurface& s);

/// rho^k = dim M_H - k(k - chi).
Int rho(const ChernData& c, const Int& k, const RuledSurface& s);

/// Closed form of rho^k for r = 2, c1 = C0 + m*f:
/// (4-k)c2 + 3k - 3 + 3(1-k)g + (1-k)e + 2(k-1)m - k^2.
Int rho_closed_form_c0mf(int m, const Int& k, const Int& c2,
                         const RuledSurface& s);

// ext^1 settings for the two extension families used in the
// non-emptiness constructions.  The dual twist D' is:
//   wall family:  D' = C0 + (m-2b)f + K_X
//   fiber family: D' = f + K_X
struct WallExtension {
    int m;     // 0 or 1
    Int b;     // degree of the sub line bundle b*f
    Int zlen;  // |Z|
};
struct FiberExtension {
    Int zlen;
};
using ExtSetting = std::variant<WallExtension, FiberExtension>;

/// ext^1 = h^1 I_Z(D') = -chi I_Z(D'), granted the vanishing of h^0 and
/// h^2 of the twisted ideal sheaf.  Computed from Riemann-Roch, never
/// hard-coded.
Int ext1_dim(const ExtSetting& setting, const RuledSurface& s);

/// ext1_dim with bookkeeping: where a stated constant disagrees with the
/// Riemann-Roch value, both are reported and flagged.
struct Ext1Report {
    Int value;                      // Riemann-Roch value
    std::optional<Int> stated;      // published constant, when one exists
    bool discrepancy;
    std::string note;
};
Ext1Report ext1_report(const ExtSetting& setting, const RuledSurface& s);

} // namespace ruled
