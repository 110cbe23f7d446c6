#pragma once

#include "wn/perm.hpp"

#include <string>
#include <vector>

namespace wn {

/// Element (f, h) of (C_l)^m x| S_m with h permuting the exponent slots.
/// The Weyl groups are the l = 2 case; phi images and representation
/// carriers use general l.
struct SdpElement {
    int modulus = 1;
    std::vector<int> exps;  // length m, each reduced mod modulus
    Permutation perm;       // degree m

    int degree() const { return perm.degree(); }
    bool is_identity() const;

    bool operator==(const SdpElement& o) const {
        return modulus == o.modulus && exps == o.exps && perm == o.perm;
    }
    bool operator!=(const SdpElement& o) const { return !(*this == o); }
    bool operator<(const SdpElement& o) const {
        if (modulus != o.modulus) return modulus < o.modulus;
        if (exps != o.exps) return exps < o.exps;
        return perm < o.perm;
    }
};

SdpElement sdp_identity(int modulus, int degree);
SdpElement make_sdp(int modulus, std::vector<int> exps, Permutation perm);
SdpElement sdp_compose(const SdpElement& x, const SdpElement& y);
SdpElement sdp_inverse(const SdpElement& x);
int sdp_order(const SdpElement& x);
std::string print_sdp(const SdpElement& x);

}  // namespace wn
