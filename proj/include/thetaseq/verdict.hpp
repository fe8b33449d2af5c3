// verdict.hpp
// Three-valued outcome of a certified comparison.  A verdict is only ever
// `holds` or `fails` when the error intervals of the two sides are disjoint;
// otherwise it is `uncertain` and the caller may re-run the comparison at
// higher precision.

#pragma once

#include <string_view>

#include "thetaseq/errval.hpp"

namespace thetaseq {

enum class Verdict { holds, fails, uncertain };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "uncertain";
    }
}

// a < b
template <class S>
Verdict certified_less(const ErrVal<S>& a, const ErrVal<S>& b) {
    if (a.hi_d() < b.lo_d()) return Verdict::holds;
    if (a.lo_d() >= b.hi_d()) return Verdict::fails;
    return Verdict::uncertain;
}

// a <= b.  Indistinguishable intervals stay uncertain: <= of two distinct
// transcendentals resolves under escalation, true equality never does.
template <class S>
Verdict certified_leq(const ErrVal<S>& a, const ErrVal<S>& b) {
    if (a.hi_d() <= b.lo_d()) return Verdict::holds;
    if (a.lo_d() > b.hi_d()) return Verdict::fails;
    return Verdict::uncertain;
}

template <class S>
Verdict certified_greater(const ErrVal<S>& a, const ErrVal<S>& b) {
    return certified_less(b, a);
}

template <class S>
Verdict certified_geq(const ErrVal<S>& a, const ErrVal<S>& b) {
    return certified_leq(b, a);
}

inline Verdict both(Verdict a, Verdict b) {
    if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
    if (a == Verdict::uncertain || b == Verdict::uncertain) return Verdict::uncertain;
    return Verdict::holds;
}

}  // namespace thetaseq
