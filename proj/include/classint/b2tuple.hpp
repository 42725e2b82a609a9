#pragma once

#include "classint/expsum.hpp"

namespace classint {

// A candidate solution (U+, U-, V, W) of the rank-2 functional equation, as
// rank-1 series with zero constant terms.  These are the integrated series:
// the potential pieces are u = t U'(t) up to constants.
struct B2Tuple {
    ExpSum uplus{1}, uminus{1}, v{1}, w{1};

    bool all_zero() const
    {
        return uplus.is_zero() && uminus.is_zero() && v.is_zero() && w.is_zero();
    }
};

// U-normalization u = t U'(t): divides each coefficient by its exponent and
// drops the constant term.
ExpSum u_to_capital(const ExpSum& u);

// Inverse direction: u(t) = t U'(t), constant term zero.
ExpSum capital_to_u(const ExpSum& U);

} // namespace classint
