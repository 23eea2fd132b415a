#include "nurowski/cases.hpp"

#include <algorithm>
#include <cmath>

#include "nurowski/errors.hpp"

namespace nurowski {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

KTilde chazy_pair(Side side, const Rational& k) {
    if (k == 0) throw DomainError("chazy_pair needs k != 0");
    Rational k2 = k * k;
    Rational kt2 = (side == Side::direct) ? (45 * k2) / (k2 + 9) : (40 * k2) / (k2 + 4);
    KTilde out;
    if (auto root = rational_sqrt(kt2)) {
        out.exact = true;
        out.value = boost::multiprecision::abs(*root);
        out.approx = static_cast<double>(out.value);
    } else {
        out.approx = std::sqrt(static_cast<double>(kt2));
    }
    return out;
}

namespace {

// One slot of a parameter pattern: either the scaled entry c/k (mapped to
// c/k~) or a fixed value passed through unchanged.
struct Slot {
    bool scaled = false;
    int c = 0;
    Rational fixed;
};

Slot S(int c) { return {true, c, 0}; }
Slot F(const Rational& r) { return {false, 0, r}; }

using Pattern = std::array<Slot, 3>;

// Canonical-order patterns per weight multiset, as tabulated for each side.
std::vector<Pattern> patterns_for(const std::array<int, 3>& canonical) {
    if (canonical == std::array<int, 3>{2, 2, 2})
        return {{S(2), S(2), S(2)}, {S(2), F(Rational(1, 3)), F(Rational(1, 3))}};
    if (canonical == std::array<int, 3>{1, 2, 3})
        return {{S(1), F(Rational(1, 3)), F(Rational(1, 2))},
                {S(1), S(2), F(Rational(1, 2))},
                {S(1), F(Rational(1, 3)), S(3)}};
    return {{S(4), S(1), S(1)}, {F(Rational(2, 3)), S(1), S(1)}};
}

std::array<int, 3> canonical_weights(const std::array<int, 3>& w) {
    std::array<int, 3> s = w;
    std::sort(s.begin(), s.end());
    if (s == std::array<int, 3>{1, 1, 4}) return {4, 1, 1};
    return s;  // {2,2,2} or {1,2,3}
}

bool slot_matches(const Slot& sl, const Rational& v, const Rational& k) {
    return sl.scaled ? (v == Rational(sl.c) / k) : (v == sl.fixed);
}

}  // namespace

TildeTriple tilde_triple(Side side, const Rational& k, const Combination& comb,
                         const RatTriple& abg) {
    if (k == 0) throw DomainError("tilde_triple needs k != 0");
    const std::array<int, 3> canon = canonical_weights(comb.weights);
    const auto patterns = patterns_for(canon);
    const std::array<Rational, 3> in{abg.alpha, abg.beta, abg.gamma};

    // Permutations of (w1,w2,w3) permute (alpha,beta,gamma) alongside; try
    // every arrangement consistent with the weight assignment.
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        if (std::array<int, 3>{comb.weights[static_cast<std::size_t>(perm[0])],
                               comb.weights[static_cast<std::size_t>(perm[1])],
                               comb.weights[static_cast<std::size_t>(perm[2])]} != canon)
            continue;
        std::array<Rational, 3> c_abg{in[static_cast<std::size_t>(perm[0])],
                                      in[static_cast<std::size_t>(perm[1])],
                                      in[static_cast<std::size_t>(perm[2])]};
        for (const auto& pat : patterns) {
            bool match = true;
            for (int i = 0; i < 3 && match; ++i)
                match = slot_matches(pat[static_cast<std::size_t>(i)],
                                     c_abg[static_cast<std::size_t>(i)], k);
            if (!match) continue;

            KTilde kt = chazy_pair(side, k);
            TildeTriple out;
            out.exact = kt.exact;
            std::array<Rational, 3> rat{};
            for (int i = 0; i < 3; ++i) {
                const Slot& sl = pat[static_cast<std::size_t>(i)];
                if (sl.scaled) {
                    if (kt.exact) rat[static_cast<std::size_t>(i)] = Rational(sl.c) / kt.value;
                    out.approx[static_cast<std::size_t>(i)] =
                        static_cast<double>(sl.c) / kt.approx;
                } else {
                    rat[static_cast<std::size_t>(i)] = sl.fixed;
                    out.approx[static_cast<std::size_t>(i)] = static_cast<double>(sl.fixed);
                }
            }
            // Undo the canonicalising permutation.
            std::array<Rational, 3> rr{};
            std::array<double, 3> aa{};
            for (int i = 0; i < 3; ++i) {
                rr[static_cast<std::size_t>(perm[i])] = rat[static_cast<std::size_t>(i)];
                aa[static_cast<std::size_t>(perm[i])] = out.approx[static_cast<std::size_t>(i)];
            }
            out.value = {rr[0], rr[1], rr[2]};
            out.approx = aa;
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw UnsupportedCaseError("(combination, abg) does not match any tabulated pattern");
}

const std::vector<ParamCase>& golden_cases() {
    static const std::vector<ParamCase> cases = [] {
        auto R = [](long n, long d) { return Rational(n, d); };
        std::vector<ParamCase> v;
        auto add = [&](Side side, std::array<int, 3> w, RatTriple abg, Rational k,
                       RatTriple abgt, Rational kt) {
            v.push_back({side, Combination(w), abg, k, abgt, kt});
        };
        const Rational kd = R(3, 2), ktd = 3;
        add(Side::direct, {2, 2, 2}, {R(4, 3), R(4, 3), R(4, 3)}, kd,
            {R(2, 3), R(2, 3), R(2, 3)}, ktd);
        add(Side::direct, {2, 2, 2}, {R(4, 3), R(1, 3), R(1, 3)}, kd,
            {R(2, 3), R(1, 3), R(1, 3)}, ktd);
        add(Side::direct, {1, 2, 3}, {R(2, 3), R(1, 3), R(1, 2)}, kd,
            {R(1, 3), R(1, 3), R(1, 2)}, ktd);
        add(Side::direct, {1, 2, 3}, {R(2, 3), R(4, 3), R(1, 2)}, kd,
            {R(1, 3), R(2, 3), R(1, 2)}, ktd);
        add(Side::direct, {1, 2, 3}, {R(2, 3), R(1, 3), 2}, kd, {R(1, 3), R(1, 3), 1}, ktd);
        add(Side::direct, {4, 1, 1}, {R(2, 3), R(2, 3), R(2, 3)}, kd,
            {R(2, 3), R(1, 3), R(1, 3)}, ktd);
        add(Side::direct, {4, 1, 1}, {R(8, 3), R(2, 3), R(2, 3)}, kd,
            {R(4, 3), R(1, 3), R(1, 3)}, ktd);
        const Rational ku = R(2, 3), ktu = 2;
        add(Side::dual, {2, 2, 2}, {3, 3, 3}, ku, {1, 1, 1}, ktu);
        add(Side::dual, {2, 2, 2}, {3, R(1, 3), R(1, 3)}, ku, {1, R(1, 3), R(1, 3)}, ktu);
        add(Side::dual, {1, 2, 3}, {R(3, 2), R(1, 3), R(1, 2)}, ku,
            {R(1, 2), R(1, 3), R(1, 2)}, ktu);
        add(Side::dual, {1, 2, 3}, {R(3, 2), 3, R(1, 2)}, ku, {R(1, 2), 1, R(1, 2)}, ktu);
        add(Side::dual, {1, 2, 3}, {R(3, 2), R(1, 3), R(9, 2)}, ku,
            {R(1, 2), R(1, 3), R(3, 2)}, ktu);
        add(Side::dual, {4, 1, 1}, {R(2, 3), R(3, 2), R(3, 2)}, ku,
            {R(2, 3), R(1, 2), R(1, 2)}, ktu);
        add(Side::dual, {4, 1, 1}, {6, R(3, 2), R(3, 2)}, ku, {2, R(1, 2), R(1, 2)}, ktu);
        return v;
    }();
    return cases;
}

std::array<Rational, 3> hypergeometric_params_exact(const RatTriple& abg) {
    Rational half(1, 2);
    return {half * (1 - abg.alpha - abg.beta - abg.gamma),
            half * (1 + abg.alpha - abg.beta - abg.gamma), 1 - abg.beta};
}

}  // namespace nurowski
