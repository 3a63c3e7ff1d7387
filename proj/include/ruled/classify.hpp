#pragma once

// The Brill-Noether verdict engine for W_H^k(2; c1, c2), c1 in
// {C0, C0+f, f}.  Every verdict carries a certificate tag naming the
// rule that decided it, and assumption flags where the underlying
// statement is conditional (moduli nonempty, c2 >> 0).

#include <vector>

#include "ruled/invariants.hpp"

namespace ruled {

enum class C1Case { C0mf, Fiber };

struct BNQuery {
    RuledSurface surface;
    C1Case c1_case;
    int m = 0;  // only for C0mf; 0 or 1
    Int c2;
    Polarization h;
    Int k;
    bool assume_large_c2 = false;

    NumClass c1() const {
        return c1_case == C1Case::Fiber ? fiber_class() : NumClass{1, Int(m)};
    }
};

enum class Status { NonEmpty, Empty, ModuliEmpty, Unknown };

const char* status_name(Status s);

struct BNVerdict {
    Status status;
    std::string certificate;
    std::vector<std::string> assumptions;  // sorted
    Int rho;
    std::optional<Rat> B;  // threshold, C0mf case only
    std::string note;

    friend bool operator==(const BNVerdict& a, const BNVerdict& b) {
        return a.status == b.status && a.certificate == b.certificate &&
               a.assumptions == b.assumptions && a.rho == b.rho && a.B == b.B &&
               a.note == b.note;
    }
};

/// B = (beta - alpha(e - m + 2g - 2)) / (2 alpha); the non-emptiness
/// rule covers 1 <= k < B.  C0mf case only.
Rat threshold_B(const BNQuery& q);

/// Necessary condition for M_H != 0: beta < alpha(2c2 + e - m).
/// False certifies ModuliEmpty.  Vacuously true in the fiber case.
bool moduli_nonempty_necessary(const BNQuery& q);

/// (c1 - 2K_X).H >= 0, which forces h^2 E = 0 for stable E and so
/// guarantees the determinantal structure of the loci.
bool h2_vanishing_check(const BNQuery& q);

/// c1.H <= 0 empties every W^k, k >= 1.
bool trivial_empty(const NumClass& c1, const NumClass& h_probe,
                   const RuledSurface& s);
bool trivial_empty(const BNQuery& q);

BNVerdict classify(const BNQuery& q);

/// Verdict table for k = 1 .. ceil(B)+2 in the regime where the
/// classification is an exact dichotomy (beta above the emptiness
/// threshold and below the moduli-necessary bound).  Asserts that no
/// Unknown appears and that the NonEmpty/Empty split sits exactly at B.
struct ScanRow {
    Int k;
    BNVerdict verdict;
};
std::vector<ScanRow> dichotomy_scan(const BNQuery& q);

} // namespace ruled
