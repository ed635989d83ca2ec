#pragma once

// Printed probability tables for 2, 3 and 4 total photons at a balanced splitter, kept
// exactly as published. Two cells of the 3-photon table are known misprints (their rows
// sum to 6/8); they are listed in known_misprints() so comparisons can flag them.

#include "photonsplit/exactmath.hpp"
#include "photonsplit/fock.hpp"

#include <map>
#include <optional>
#include <vector>

namespace photonsplit {

struct ReferenceRow {
    FockInput input;
    std::vector<BigRational> by_n1;  // ascending N1 = 0 .. total
};

struct ReferenceCell {
    FockInput input;
    int n1;
    BigRational printed;
    BigRational corrected;
};

inline std::vector<ReferenceRow> reference_table(int total) {
    auto q = [](long p, long d) { return BigRational(p, d); };
    switch (total) {
        case 2:
            return {{{2, 0}, {q(1, 4), q(1, 2), q(1, 4)}},
                    {{1, 1}, {q(1, 2), 0, q(1, 2)}},
                    {{0, 2}, {q(1, 4), q(1, 2), q(1, 4)}}};
        case 3:
            return {{{3, 0}, {q(1, 8), q(3, 8), q(3, 8), q(1, 8)}},
                    {{2, 1}, {q(3, 8), q(1, 8), q(1, 8), q(1, 8)}},
                    {{1, 2}, {q(3, 8), q(1, 8), q(1, 8), q(1, 8)}},
                    {{0, 3}, {q(1, 8), q(3, 8), q(3, 8), q(1, 8)}}};
        case 4:
            return {{{4, 0}, {q(1, 16), q(1, 4), q(3, 8), q(1, 4), q(1, 16)}},
                    {{3, 1}, {q(1, 4), q(1, 4), 0, q(1, 4), q(1, 4)}},
                    {{2, 2}, {q(3, 8), 0, q(1, 4), 0, q(3, 8)}},
                    {{1, 3}, {q(1, 4), q(1, 4), 0, q(1, 4), q(1, 4)}},
                    {{0, 4}, {q(1, 16), q(1, 4), q(3, 8), q(1, 4), q(1, 16)}}};
        default:
            return {};
    }
}

inline std::vector<ReferenceCell> known_misprints() {
    return {{{2, 1}, 3, BigRational(1, 8), BigRational(3, 8)},
            {{1, 2}, 3, BigRational(1, 8), BigRational(3, 8)}};
}

inline std::optional<ReferenceCell> find_misprint(const FockInput& in, int n1) {
    for (const auto& cell : known_misprints())
        if (cell.input == in && cell.n1 == n1) return cell;
    return std::nullopt;
}

}  // namespace photonsplit
