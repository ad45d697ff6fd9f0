#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gallai/patterns.hpp"

namespace gallai {

/// Color-role counts: the first r colors forbid B3plus, the middle s colors
/// forbid S3plus, the last t colors forbid K3.
struct Parameters {
    int r = 0;
    int s = 0;
    int t = 0;

    int k() const { return r + s + t; }
    bool operator==(const Parameters&) const = default;
};

enum class Condition { c1, c2, c3, c4, c5, c6, c7, c8, c9, c10 };

std::string_view condition_name(Condition c);

// The ten mutually exclusive parameter classes (c1..c4 require s = 0,
// c5..c10 require s >= 1). Throws std::invalid_argument for k = 0 or
// negative entries.
Condition condition_label(const Parameters& p);

enum class ColorRole { FirstR, MiddleS, LastT };

ColorRole role_of_color(const Parameters& p, int color);
Pattern target_for_color(const Parameters& p, int color);

// f(r,s,t) = gr_k(K3 : r.B3+, s.S3+, t.K3) - 1, with the recursion seed
// f(0,0,0) = 1. Exact integer arithmetic; throws on overflow.
std::int64_t f_value(const Parameters& p);

std::int64_t gallai_ramsey_value(const Parameters& p);  // f + 1; rejects k = 0

// Two-color Ramsey constants for pairs from {K3, S3plus, B3plus}.
int classical_ramsey(Pattern a, Pattern b);

struct InequalityInstance {
    int index = 0;          // 1..17
    Parameters at;          // the unshifted triple
    std::int64_t num = 0;   // exact ratio num/den, reduced
    std::int64_t den = 1;
    bool pass = false;
    bool equality = false;  // ratio equals the bound exactly
};

struct InequalityReport {
    std::vector<InequalityInstance> instances;
    int violations = 0;
};

// Evaluates the seventeen ratio bounds on f over every triple with
// 0 <= r <= max_r, 0 <= s <= max_s, 0 <= t <= max_t and k >= 1, skipping
// instances whose shifted triple has a negative entry. Exact rationals.
InequalityReport check_inequalities(int max_r, int max_s, int max_t);

}  // namespace gallai
