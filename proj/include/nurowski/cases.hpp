#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nurowski/chazy.hpp"
#include "nurowski/ode_family.hpp"
#include "nurowski/pell.hpp"

namespace nurowski {

struct RatTriple {
    Rational alpha, beta, gamma;
    AbgTriple to_abg() const {
        return {static_cast<double>(alpha), static_cast<double>(beta), static_cast<double>(gamma)};
    }
    bool operator==(const RatTriple&) const = default;
};

// sqrt of a rational if it is a perfect rational square.
std::optional<Rational> rational_sqrt(const Rational& r);

struct KTilde {
    bool exact = false;
    Rational value;   // meaningful when exact
    double approx = 0.0;
};

// Positive root of 45/kt^2 - 9/k^2 = 1 (direct) resp. 40/kt^2 - 4/k^2 = 1 (dual).
KTilde chazy_pair(Side side, const Rational& k);

struct TildeTriple {
    bool exact = false;
    RatTriple value;  // meaningful when exact
    std::array<double, 3> approx{};
};

// Slot-wise parameter map of the seven tabulated (combination, abg) patterns
// per side; untouched slots (1/3, 1/2, 2/3) pass through unchanged.
TildeTriple tilde_triple(Side side, const Rational& k, const Combination& comb,
                         const RatTriple& abg);

// A case record binding a Chazy combination, (alpha,beta,gamma), k, and the
// induced tilde parameters.
struct ParamCase {
    Side side = Side::direct;
    Combination combination;
    RatTriple abg;
    Rational k;
    RatTriple abg_tilde;
    Rational k_tilde;
};

// The fourteen tabulated conformally flat cases (seven per side, direct
// k = 3/2 and dual k = 2/3), in source order.
const std::vector<ParamCase>& golden_cases();

std::array<Rational, 3> hypergeometric_params_exact(const RatTriple& abg);

}  // namespace nurowski
