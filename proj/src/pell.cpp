#include "nurowski/pell.hpp"

#include "nurowski/errors.hpp"

namespace nurowski {

bool pell_identity_holds(PellFamily family, const PellPair& p) {
    BigInt d = (family == PellFamily::direct) ? 5 : 10;
    return d * p.small * p.small - p.big * p.big == 1;
}

std::vector<PellPair> pell_enumerate(PellFamily family, int count) {
    if (count < 1) throw DomainError("pell_enumerate needs count >= 1");
    BigInt big = (family == PellFamily::direct) ? 2 : 3;
    BigInt small = 1;
    std::vector<PellPair> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        PellPair p{n, big, small};
        if (!pell_identity_holds(family, p))
            throw DomainError("pell recurrence produced a non-solution");
        out.push_back(p);
        if (family == PellFamily::direct) {
            BigInt nb = 9 * big + 20 * small;
            small = 4 * big + 9 * small;
            big = nb;
        } else {
            BigInt nb = 19 * big + 60 * small;
            small = 6 * big + 19 * small;
            big = nb;
        }
    }
    return out;
}

}  // namespace nurowski
