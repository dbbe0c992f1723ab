#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "humbert/bqf.hpp"

namespace humbert {

inline constexpr std::int64_t kCoprimeSearchHeight = 200;

struct CoprimeValue
{
    std::int64_t x;
    std::int64_t y;
    std::int64_t a; ///< Q(x, y), positive and coprime to 2m
};

/// Walks the square spiral ring by ring (ring R starts at (R, 0) and turns
/// counterclockwise) and returns the first value coprime to 2m.
CoprimeValue find_coprime_value(BQF const& q, std::int64_t m,
                                std::int64_t height_bound = kCoprimeSearchHeight);

/// chi_p(Q) for p | D0: (a|p) for odd p, (8|a) for p = 2.
int genus_character(BQF const& q, std::int64_t p, std::int64_t d0);

/// chi_{-4}(Q) = (-4|a).
int chi_minus4(BQF const& q, std::int64_t d0);

enum class FormKind { primitive, four_times_primitive };

/// A GL(2,Z)-class of forms of discriminant -16 D0 representing only
/// 0, 1 mod 4, with its genus characters and the split D0 = D N.
struct EligibleForm
{
    BQF form;
    std::int64_t d0 = 0;
    FormKind kind = FormKind::primitive;
    std::map<std::int64_t, int> chars;
    std::int64_t D = 1;
    std::int64_t N = 1;
    bool ambiguous = false;

    /// The primitive form the characters are evaluated on: Q, or Q' for Q = 4Q'.
    BQF character_form() const { return kind == FormKind::primitive ? form : form.divided(4); }
};

std::vector<EligibleForm> eligible_forms(std::int64_t d0);

int atkin_lehner_group_order(EligibleForm const& f);

} // namespace humbert
