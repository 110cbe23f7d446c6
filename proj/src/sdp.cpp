#include "wn/sdp.hpp"

#include <sstream>
#include <stdexcept>

namespace wn {

bool SdpElement::is_identity() const {
    for (int e : exps)
        if (e != 0) return false;
    return perm.is_identity();
}

SdpElement sdp_identity(int modulus, int degree) {
    return SdpElement{modulus, std::vector<int>(static_cast<size_t>(degree), 0),
                      Permutation(degree)};
}

SdpElement make_sdp(int modulus, std::vector<int> exps, Permutation perm) {
    if (modulus < 1) throw std::invalid_argument("make_sdp: modulus must be >= 1");
    if (static_cast<int>(exps.size()) != perm.degree())
        throw std::invalid_argument("make_sdp: exponent/permutation size mismatch");
    for (auto& e : exps) e = ((e % modulus) + modulus) % modulus;
    return SdpElement{modulus, std::move(exps), std::move(perm)};
}

SdpElement sdp_compose(const SdpElement& x, const SdpElement& y) {
    if (x.modulus != y.modulus || x.degree() != y.degree())
        throw std::invalid_argument("sdp_compose: shape mismatch");
    const int m = x.degree();
    std::vector<int> exps(static_cast<size_t>(m));
    // (a, s)(b, t) = (a + s.b, st), slot i of s.b holds b at s^-1(i).
    for (int j = 0; j < m; ++j) {
        int i = x.perm(j);
        exps[static_cast<size_t>(i)] =
            (x.exps[static_cast<size_t>(i)] + y.exps[static_cast<size_t>(j)]) % x.modulus;
    }
    return SdpElement{x.modulus, std::move(exps), x.perm.compose(y.perm)};
}

SdpElement sdp_inverse(const SdpElement& x) {
    Permutation pinv = x.perm.inverse();
    const int m = x.degree();
    std::vector<int> exps(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        int i = pinv(j);
        exps[static_cast<size_t>(i)] =
            (x.modulus - x.exps[static_cast<size_t>(j)]) % x.modulus;
    }
    return SdpElement{x.modulus, std::move(exps), std::move(pinv)};
}

int sdp_order(const SdpElement& x) {
    SdpElement acc = x;
    int k = 1;
    while (!acc.is_identity()) {
        acc = sdp_compose(acc, x);
        ++k;
        if (k > 1'000'000) throw std::logic_error("sdp_order: runaway");
    }
    return k;
}

std::string print_sdp(const SdpElement& x) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < x.exps.size(); ++i) {
        if (i) os << ' ';
        os << x.exps[i];
    }
    os << "]" << print_permutation(x.perm);
    return os.str();
}

}  // namespace wn
