#include "gallai/formula.hpp"

#include <numeric>
#include <stdexcept>

namespace gallai {

namespace {

void check_nonnegative(const Parameters& p) {
    if (p.r < 0 || p.s < 0 || p.t < 0)
        throw std::invalid_argument("parameters must be nonnegative");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("f(r,s,t) overflows 64-bit arithmetic");
    return out;
}

std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace

std::string_view condition_name(Condition c) {
    static constexpr std::string_view names[] = {"c1", "c2", "c3", "c4", "c5",
                                                 "c6", "c7", "c8", "c9", "c10"};
    return names[static_cast<int>(c)];
}

Condition condition_label(const Parameters& p) {
    check_nonnegative(p);
    if (p.k() < 1) throw std::invalid_argument("condition_label requires k >= 1");
    const bool r_even = p.r % 2 == 0;
    if (p.s == 0) {
        const bool t_even = p.t % 2 == 0;
        if (r_even) return t_even ? Condition::c1 : Condition::c2;
        return t_even ? Condition::c4 : Condition::c3;
    }
    const bool st_even = (p.s + p.t) % 2 == 0;
    if (r_even) return st_even ? Condition::c5 : Condition::c6;
    if (st_even) return Condition::c10;
    if (p.t >= 1) return Condition::c7;
    return p.s == 1 ? Condition::c9 : Condition::c8;
}

ColorRole role_of_color(const Parameters& p, int color) {
    if (color < 1 || color > p.k()) throw std::invalid_argument("color outside palette");
    if (color <= p.r) return ColorRole::FirstR;
    if (color <= p.r + p.s) return ColorRole::MiddleS;
    return ColorRole::LastT;
}

Pattern target_for_color(const Parameters& p, int color) {
    switch (role_of_color(p, color)) {
        case ColorRole::FirstR: return Pattern::B3plus;
        case ColorRole::MiddleS: return Pattern::S3plus;
        case ColorRole::LastT: return Pattern::K3;
    }
    throw std::logic_error("unreachable");
}

std::int64_t f_value(const Parameters& p) {
    check_nonnegative(p);
    if (p.k() == 0) return 1;  // recursion seed: the single-vertex base
    const int r = p.r, s = p.s, t = p.t;
    switch (condition_label(p)) {
        case Condition::c1: return checked_mul(ipow(17, r / 2), ipow(5, t / 2));
        case Condition::c2:
            return checked_mul(2, checked_mul(ipow(17, r / 2), ipow(5, (t - 1) / 2)));
        case Condition::c3:
            return checked_mul(8, checked_mul(ipow(17, (r - 1) / 2), ipow(5, (t - 1) / 2)));
        case Condition::c4:
            return checked_mul(4, checked_mul(ipow(17, (r - 1) / 2), ipow(5, t / 2)));
        case Condition::c5:
            return checked_mul(6, checked_mul(ipow(17, r / 2), ipow(5, (s + t - 2) / 2)));
        case Condition::c6:
            return checked_mul(3, checked_mul(ipow(17, r / 2), ipow(5, (s + t - 1) / 2)));
        case Condition::c7:
            return checked_mul(48,
                               checked_mul(ipow(17, (r - 1) / 2), ipow(5, (s + t - 3) / 2)));
        case Condition::c8:
            return checked_mul(48, checked_mul(ipow(17, (r - 1) / 2), ipow(5, (s - 3) / 2)));
        case Condition::c9: return checked_mul(9, ipow(17, (r - 1) / 2));
        case Condition::c10:
            return checked_mul(24,
                               checked_mul(ipow(17, (r - 1) / 2), ipow(5, (s + t - 2) / 2)));
    }
    throw std::logic_error("unreachable");
}

std::int64_t gallai_ramsey_value(const Parameters& p) {
    if (p.k() < 1) throw std::invalid_argument("gallai_ramsey_value requires k >= 1");
    return f_value(p) + 1;
}

int classical_ramsey(Pattern a, Pattern b) {
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    if (a == Pattern::K3 && b == Pattern::K3) return 6;
    if (a == Pattern::K3 && b == Pattern::S3plus) return 7;
    if (a == Pattern::K3 && b == Pattern::B3plus) return 9;
    if (a == Pattern::S3plus && b == Pattern::S3plus) return 7;
    if (a == Pattern::S3plus && b == Pattern::B3plus) return 10;
    if (a == Pattern::B3plus && b == Pattern::B3plus) return 18;
    throw std::invalid_argument("no Ramsey constant for pair (" +
                                std::string(pattern_name(a)) + ", " +
                                std::string(pattern_name(b)) + ")");
}

namespace {

struct IneqBound {
    int index;
    int dr, ds, dt;
    std::int64_t bound_num, bound_den;
    bool equality_claim;  // ratio must equal the bound, not just stay below
};

// Displayed order of the seventeen ratio bounds; inequality 3's bound is
// 1/3 when s = 1 and t = 0 at the evaluation triple, 5/16 otherwise.
constexpr IneqBound kIneqs[] = {
    {1, 0, 0, -1, 1, 2, false},   {2, 0, -1, 0, 1, 2, false},
    {3, -1, 0, 0, 5, 16, false},  {4, -1, 1, 0, 3, 4, false},
    {5, -1, 0, 1, 2, 3, false},   {6, 0, 0, -2, 1, 5, false},
    {7, 0, -1, -1, 1, 5, false},  {8, 0, -2, 0, 1, 5, false},
    {9, -1, 0, -1, 1, 8, false},  {10, -1, -1, 0, 1, 8, false},
    {11, -1, 1, -1, 3, 8, false}, {12, -1, -1, 1, 5, 16, false},
    {13, -2, 1, 1, 15, 34, false}, {14, -2, 1, 0, 3, 17, false},
    {15, -2, 0, 2, 16, 51, false}, {16, -2, 0, 1, 8, 51, false},
    {17, -2, 0, 0, 1, 17, true},
};

}  // namespace

InequalityReport check_inequalities(int max_r, int max_s, int max_t) {
    if (max_r < 2 || max_s < 2 || max_t < 2)
        throw std::invalid_argument("inequality bounds must be >= 2");
    InequalityReport report;
    for (int r = 0; r <= max_r; ++r)
        for (int s = 0; s <= max_s; ++s)
            for (int t = 0; t <= max_t; ++t) {
                if (r + s + t == 0) continue;
                const std::int64_t den = f_value({r, s, t});
                for (const IneqBound& q : kIneqs) {
                    const int r2 = r + q.dr, s2 = s + q.ds, t2 = t + q.dt;
                    if (r2 < 0 || s2 < 0 || t2 < 0) continue;
                    const std::int64_t num = f_value({r2, s2, t2});
                    std::int64_t bn = q.bound_num, bd = q.bound_den;
                    if (q.index == 3 && s == 1 && t == 0) {
                        bn = 1;
                        bd = 3;
                    }
                    // exact comparison num/den vs bn/bd via cross products
                    const __int128 lhs = static_cast<__int128>(num) * bd;
                    const __int128 rhs = static_cast<__int128>(bn) * den;
                    const bool equal = lhs == rhs;
                    const bool pass = q.equality_claim ? equal : lhs <= rhs;
                    const std::int64_t g = std::gcd(num, den);
                    report.instances.push_back(
                        {q.index, {r, s, t}, num / g, den / g, pass, equal});
                    if (!pass) ++report.violations;
                }
            }
    return report;
}

}  // namespace gallai
