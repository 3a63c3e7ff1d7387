#include "ruled/classify.hpp"

#include <algorithm>

namespace ruled {

const char* status_name(Status s) {
    switch (s) {
        case Status::NonEmpty: return "NonEmpty";
        case Status::Empty: return "Empty";
        case Status::ModuliEmpty: return "ModuliEmpty";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

Rat threshold_B(const BNQuery& q) {
    if (q.c1_case != C1Case::C0mf)
        throw PreconditionError("threshold_B applies to c1 = C0 + m*f only");
    const auto& s = q.surface;
    Int num = q.h.beta() - q.h.alpha() * (s.e - q.m + 2 * s.g - 2);
    return Rat(num, 2 * q.h.alpha());
}

bool moduli_nonempty_necessary(const BNQuery& q) {
    if (q.c1_case != C1Case::C0mf) return true;  // no bound stated for c1 = f
    const auto& s = q.surface;
    return q.h.beta() < q.h.alpha() * (2 * q.c2 + s.e - q.m);
}

bool h2_vanishing_check(const BNQuery& q) {
    NumClass d = q.c1() - 2 * canonical_class(q.surface);
    return intersect(d, q.h.num_class(), q.surface) >= 0;
}

bool trivial_empty(const NumClass& c1, const NumClass& h_probe,
                   const RuledSurface& s) {
    return intersect(c1, h_probe, s) <= 0;
}

bool trivial_empty(const BNQuery& q) {
    if (q.k < 1) throw PreconditionError("trivial_empty requires k >= 1");
    return trivial_empty(q.c1(), q.h.num_class(), q.surface);
}

namespace {

std::vector<std::string> assumptions_for(Status st, bool assume_large_c2) {
    std::vector<std::string> a;
    if (st == Status::Unknown) return a;
    if (!assume_large_c2) a.push_back("LargeC2Assumed");
    if (st == Status::NonEmpty) a.push_back("ModuliNonemptyAssumed");
    return a;  // already sorted
}

} // namespace

BNVerdict classify(const BNQuery& q) {
    if (q.k < 0) throw PreconditionError("classify requires k >= 0");
    if (q.c2 < 1) throw PreconditionError("classify requires c2 >= 1");

    const RuledSurface& s = q.surface;
    BNVerdict v;
    v.rho = rho(ChernData{2, q.c1(), q.c2}, q.k, s);
    auto finish = [&](Status st, const char* cert,
                      std::string note = "") -> BNVerdict {
        v.status = st;
        v.certificate = cert;
        v.note = std::move(note);
        v.assumptions = assumptions_for(st, q.assume_large_c2);
        return v;
    };

    if (q.c1_case == C1Case::C0mf) {
        const Int& alpha = q.h.alpha();
        const Int& beta = q.h.beta();
        if (!moduli_nonempty_necessary(q))
            return finish(Status::ModuliEmpty, "Thm-4.1-necessary",
                          "beta >= alpha(2c2+e-m) certifies M_H empty");
        v.B = threshold_B(q);
        if (q.k == 0)
            return finish(Status::NonEmpty, "W0-filtration",
                          "W^0 is the whole moduli space");
        if (trivial_empty(q))
            return finish(Status::Empty, "c1H-nonpositive");
        bool above_em = beta > alpha * (s.e + q.m);
        if (above_em && Rat(q.k) < *v.B) {
            // Implied by k < B and the moduli-necessary bound.
            if (q.k - 1 + s.g >= q.c2)
                throw std::logic_error("Cor-4.3 range check failed: b >= c2");
            return finish(Status::NonEmpty, "Cor-4.3");
        }
        if (Rat(q.k) >= *v.B) {
            if (beta > alpha * (8 + s.e - q.m + 2 * s.g))
                return finish(Status::Empty, "Thm-4.5");
            if (s.g == 1 && beta > alpha * (6 + s.e - q.m))
                return finish(Status::Empty, "Rem-4.6");
            return finish(Status::Unknown, "none",
                          "k >= B but hypothesis beta > alpha(8+e-m+2g) of "
                          "Thm-4.5 fails");
        }
        return finish(Status::Unknown, "none",
                      "hypothesis beta > alpha(e+m) of Cor-4.3 fails");
    }

    // c1 = f: results stated for H = C0 + beta*f apply to every ample ray
    // after scaling to alpha = 1 (all predicates are ray-invariant).
    if (q.k == 0)
        return finish(Status::NonEmpty, "W0-filtration",
                      "W^0 is the whole moduli space");
    if (q.k == 1) {
        Int rho1 = rho(ChernData{2, fiber_class(), q.c2}, 1, s);
        return finish(Status::NonEmpty, "Thm-4.8",
                      "W^1 \\ W^2 smooth of expected dimension 3c2+g-1 = " +
                          rho1.str());
    }
    if (q.k == 2)
        return finish(Status::NonEmpty, "Prop-7.7-external",
                      "external citation, not re-derived here");
    return finish(Status::Empty, "Thm-4.10");
}

std::vector<ScanRow> dichotomy_scan(const BNQuery& q) {
    if (q.c1_case != C1Case::C0mf)
        throw PreconditionError("dichotomy_scan requires c1 = C0 + m*f");
    const RuledSurface& s = q.surface;
    const Int& alpha = q.h.alpha();
    const Int& beta = q.h.beta();
    bool regime = beta > alpha * (8 + s.e - q.m + 2 * s.g) ||
                  (s.g == 1 && beta > alpha * (6 + s.e - q.m));
    if (!regime)
        throw PreconditionError(
            "dichotomy regime hypothesis beta > alpha(8+e-m+2g) fails");
    if (!moduli_nonempty_necessary(q))
        throw PreconditionError(
            "dichotomy regime: necessary bound beta < alpha(2c2+e-m) fails");

    Rat B = threshold_B(q);
    Int kmax = ceil_rat(B) + 2;
    std::vector<ScanRow> rows;
    for (Int k = 1; k <= kmax; ++k) {
        BNQuery qq = q;
        qq.k = k;
        BNVerdict v = classify(qq);
        bool expect_nonempty = Rat(k) < B;
        if (v.status == Status::Unknown)
            throw std::logic_error("dichotomy_scan: Unknown inside regime");
        if (expect_nonempty != (v.status == Status::NonEmpty))
            throw std::logic_error("dichotomy_scan: split not at B");
        rows.push_back({k, std::move(v)});
    }
    return rows;
}

} // namespace ruled
