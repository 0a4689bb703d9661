#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "vnum/errors.hpp"

namespace vnum {

/// Interpretation of the bracket [.] appearing in several closed forms. The
/// default is floor; the verification harness probes both readings per
/// theorem and records which one the computed values support.
enum class Bracket { Floor, Ceil };

namespace detail {

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

inline int bracket_div(int a, int b, Bracket mode) {
    return mode == Bracket::Floor ? floor_div(a, b) : ceil_div(a, b);
}

}  // namespace detail

/// v of the edge ideal of the path L_n: floor(n/4), plus one when
/// n = 2, 3 (mod 4).
inline int path_v(int n) {
    if (n < 2) {
        throw InvalidInput("path_v requires n >= 2");
    }
    int r = n % 4;
    return n / 4 + ((r == 2 || r == 3) ? 1 : 0);
}

/// v of the edge ideal of the squared path L_n^2: [n/6], plus one unless
/// n = 0, 1 (mod 6).
inline int path_square_v(int n, Bracket mode = Bracket::Floor) {
    if (n < 2) {
        throw InvalidInput("path_square_v requires n >= 2");
    }
    int r = n % 6;
    return detail::bracket_div(n, 6, mode) + ((r == 0 || r == 1) ? 0 : 1);
}

/// v of the edge ideal of the squared cycle C_n^2: [(n-5)/6] + 1 when
/// n = 0, 5 (mod 6), otherwise [(n-5)/6] + 2.
inline int cycle_square_v(int n, Bracket mode = Bracket::Floor) {
    if (n < 7) {
        throw InvalidInput("cycle_square_v requires n >= 7");
    }
    int r = n % 6;
    return detail::bracket_div(n - 5, 6, mode) + ((r == 0 || r == 5) ? 1 : 2);
}

/// v of the k-th square-free power of the path edge ideal.
inline int sqfree_power_path_v(int n, int k, Bracket mode = Bracket::Floor) {
    if (n < 2) {
        throw InvalidInput("sqfree_power_path_v requires n >= 2");
    }
    if (k < 1 || k > n / 2) {
        throw InvalidInput("sqfree_power_path_v requires 1 <= k <= floor(n/2)");
    }
    int base = detail::bracket_div(n, 4, mode);
    if (k % 2 == 1) {
        int r = n % 4;
        return base + 3 * (k - 1) / 2 + ((r == 2 || r == 3) ? 1 : 0);
    }
    return base + 3 * k / 2 - 1;
}

/// v of the k-th symbolic power of the complete-graph edge ideal, as the
/// closed form k + [(k-1)/(n-1)] + 1 reads under the chosen bracket.
inline int complete_symbolic_v(int n, int k, Bracket mode = Bracket::Floor) {
    if (n < 2) {
        throw InvalidInput("complete_symbolic_v requires n >= 2");
    }
    if (k < 1) {
        throw InvalidInput("complete_symbolic_v requires k >= 1");
    }
    return k + detail::bracket_div(k - 1, n - 1, mode) + 1;
}

/// The corrected closed form v = k + ceil((k-1)/(n-1)), valid for every
/// k >= 1. The bracket form k + [(k-1)/(n-1)] + 1 overshoots it by one at
/// k = 1 and whenever n-1 divides k-1 under either bracket reading; the
/// harness records those instances as known issues.
inline int complete_symbolic_v_exact(int n, int k) {
    if (n < 2 || k < 1) {
        throw InvalidInput("complete_symbolic_v_exact requires n >= 2 and k >= 1");
    }
    return k + detail::ceil_div(k - 1, n - 1);
}

/// v of ordinary powers of an ideal with linear powers: alpha(I) * k - 1.
inline int linear_powers_v(int d, int k) {
    if (d < 1 || k < 1) {
        throw InvalidInput("linear_powers_v requires d >= 1 and k >= 1");
    }
    return d * k - 1;
}

/// Parameters for the six mixed-product v-number cases and the five
/// regularity cases. Cases 1-5 use the scalar fields; case 6 uses terms.
struct MixedParams {
    int q = 0;
    int r = 0;
    int s = 0;
    int t = 0;
    std::vector<std::pair<int, int>> terms;
};

/// Closed-form v-number of mixed product ideals, by case:
///   1: v(I_q)            = q - 1
///   2: v(I_q J_r)        = q + r - 1
///   3: v(I_q + J_t)      = q + t - 2
///   4: v(I_q J_r + I_s)  = q + r - 1            (q < s)
///   5: v(I_q J_r + I_s J_t) = min(q+r-1, s+t-1) (q < s, t < r)
///   6: v(sum I_{q_i} J_{r_i}) = min over the endpoint candidates
///      q_1+r_1-1 and q_s+r_s-1 and the interior q_{i+1}+r_i-2 for
///      1 <= i <= s-1, as the case analysis derives them.
inline int mixed_v(int case_no, const MixedParams& p) {
    switch (case_no) {
        case 1:
            if (p.q < 1) throw InvalidInput("mixed_v case 1 requires q >= 1");
            return p.q - 1;
        case 2:
            if (p.q < 1 || p.r < 1) throw InvalidInput("mixed_v case 2 requires q, r >= 1");
            return p.q + p.r - 1;
        case 3:
            if (p.q < 1 || p.t < 1) throw InvalidInput("mixed_v case 3 requires q, t >= 1");
            return p.q + p.t - 2;
        case 4:
            if (p.q < 1 || p.r < 1 || p.s <= p.q) {
                throw InvalidInput("mixed_v case 4 requires q, r >= 1 and q < s");
            }
            return p.q + p.r - 1;
        case 5:
            if (p.q < 1 || p.t < 1 || p.s <= p.q || p.r <= p.t) {
                throw InvalidInput("mixed_v case 5 requires 1 <= q < s and 1 <= t < r");
            }
            return std::min(p.q + p.r - 1, p.s + p.t - 1);
        case 6: {
            const auto& terms = p.terms;
            if (terms.empty()) {
                throw InvalidInput("mixed_v case 6 requires at least one term");
            }
            for (size_t i = 0; i < terms.size(); ++i) {
                if (terms[i].first < 1 || terms[i].second < 1) {
                    throw InvalidInput("mixed_v case 6 terms must be two-block");
                }
                if (i > 0 && !(terms[i].first > terms[i - 1].first &&
                               terms[i].second < terms[i - 1].second)) {
                    throw InvalidInput("mixed_v case 6 terms must have increasing q and decreasing r");
                }
            }
            int best = terms.front().first + terms.front().second - 1;
            best = std::min(best, terms.back().first + terms.back().second - 1);
            for (size_t i = 0; i + 1 < terms.size(); ++i) {
                best = std::min(best, terms[i + 1].first + terms[i].second - 2);
            }
            return best;
        }
        default:
            throw InvalidInput("mixed_v case must be 1..6");
    }
}

/// Closed-form regularity of mixed product ideals (stored constants; no
/// resolution is ever computed):
///   1: reg(I_q)             = q
///   2: reg(I_q J_r)         = q + r
///   3: reg(I_q + J_t)       = q + t - 1
///   4: reg(I_q J_r + I_s)   = s + r - 1   (q < s)
///   5: reg(I_q J_r + I_s J_t) = s + r - 1 (q < s, t < r)
inline int mixed_reg(int case_no, const MixedParams& p) {
    switch (case_no) {
        case 1:
            if (p.q < 1) throw InvalidInput("mixed_reg case 1 requires q >= 1");
            return p.q;
        case 2:
            if (p.q < 1 || p.r < 1) throw InvalidInput("mixed_reg case 2 requires q, r >= 1");
            return p.q + p.r;
        case 3:
            if (p.q < 1 || p.t < 1) throw InvalidInput("mixed_reg case 3 requires q, t >= 1");
            return p.q + p.t - 1;
        case 4:
            if (p.q < 1 || p.r < 1 || p.s <= p.q) {
                throw InvalidInput("mixed_reg case 4 requires q, r >= 1 and q < s");
            }
            return p.s + p.r - 1;
        case 5:
            if (p.q < 1 || p.t < 1 || p.s <= p.q || p.r <= p.t) {
                throw InvalidInput("mixed_reg case 5 requires 1 <= q < s and 1 <= t < r");
            }
            return p.s + p.r - 1;
        default:
            throw InvalidInput("mixed_reg case must be 1..5");
    }
}

}  // namespace vnum
