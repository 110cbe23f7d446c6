#include "wn/weyl.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wn {

SignVector::SignVector(int n) : n_(n) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("SignVector: rank must be between 0 and 64");
}

SignVector SignVector::from_string(const std::string& bits) {
    SignVector s(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            s.set(static_cast<int>(i), 1);
        else if (bits[i] != '0')
            throw std::invalid_argument("SignVector: expected a 0/1 string");
    }
    return s;
}

void SignVector::set(int i, int v) {
    if (i < 0 || i >= n_) throw std::out_of_range("SignVector::set");
    if (v & 1)
        bits_ |= (uint64_t{1} << i);
    else
        bits_ &= ~(uint64_t{1} << i);
}

int SignVector::weight() const { return std::popcount(bits_); }

SignVector SignVector::operator^(const SignVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SignVector: rank mismatch");
    SignVector s(n_);
    s.bits_ = bits_ ^ o.bits_;
    return s;
}

bool SignVector::operator<(const SignVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return false;
    uint64_t low = diff & (~diff + 1);
    return (bits_ & low) == 0;
}

std::string SignVector::to_string() const {
    std::string s(static_cast<size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bit(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b" || s == "C" || s == "c") return Family::B;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("family must be one of A, B, D");
}

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

bool GroupSpec::sign_allowed(const SignVector& s) const {
    if (s.size() != rank) return false;
    switch (family) {
        case Family::A: return s.is_zero();
        case Family::D: return s.parity() == 0;
        case Family::B: return true;
    }
    return false;
}

unsigned long long GroupSpec::order() const {
    unsigned long long fact = 1;
    for (int i = 2; i <= rank; ++i) {
        if (fact > ~0ull / static_cast<unsigned long long>(i))
            throw std::overflow_error("GroupSpec::order: overflow");
        fact *= static_cast<unsigned long long>(i);
    }
    int sign_bits = family == Family::A ? 0 : (family == Family::B ? rank : rank - 1);
    for (int i = 0; i < sign_bits; ++i) {
        if (fact > ~0ull / 2) throw std::overflow_error("GroupSpec::order: overflow");
        fact *= 2;
    }
    return fact;
}

WeylElement identity_element(int rank) {
    return WeylElement{SignVector(rank), Permutation(rank)};
}

WeylElement make_element(const SignVector& sign, const Permutation& perm) {
    if (sign.size() != perm.degree())
        throw std::invalid_argument("WeylElement: sign/permutation rank mismatch");
    return WeylElement{sign, perm};
}

SignVector act(const Permutation& sigma, const SignVector& a) {
    if (sigma.degree() != a.size())
        throw std::invalid_argument("act: rank mismatch");
    SignVector out(a.size());
    for (int j = 0; j < a.size(); ++j)
        if (a.bit(j)) out.set(sigma(j), 1);
    return out;
}

WeylElement compose(const WeylElement& x, const WeylElement& y) {
    if (x.rank() != y.rank())
        throw std::invalid_argument("compose: rank mismatch");
    return WeylElement{x.sign ^ act(x.perm, y.sign), x.perm.compose(y.perm)};
}

WeylElement compose(const WeylElement& x, const WeylElement& y, const GroupSpec& spec) {
    if (!spec.sign_allowed(x.sign) || !spec.sign_allowed(y.sign) ||
        x.rank() != spec.rank || y.rank() != spec.rank)
        throw std::invalid_argument("compose: element does not conform to the group");
    return compose(x, y);
}

WeylElement inverse(const WeylElement& x) {
    Permutation pinv = x.perm.inverse();
    return WeylElement{act(pinv, x.sign), pinv};
}

WeylElement conjugate(const WeylElement& x, const WeylElement& g) {
    return compose(compose(g, x), inverse(g));
}

WeylElement conjugate_closed_form(const WeylElement& x, const WeylElement& g) {
    const SignVector& a = x.sign;
    const SignVector& b = g.sign;
    const Permutation& sigma = x.perm;
    const Permutation& tau = g.perm;
    Permutation core = tau.compose(sigma).compose(tau.inverse());
    SignVector sign = b ^ act(tau, a) ^ act(core, b);  // b^-1 = b in C2^n
    return WeylElement{sign, core};
}

int element_order(const WeylElement& x) {
    WeylElement acc = x;
    int k = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, x);
        ++k;
        if (k > 1'000'000) throw std::logic_error("element_order: runaway");
    }
    return k;
}

int total_sign_parity(const WeylElement& x) { return x.sign.parity(); }

std::vector<SignedCycle> sign_cycle_decompose(const WeylElement& x) {
    std::vector<SignedCycle> out;
    std::vector<char> covered(static_cast<size_t>(x.rank()), 0);
    for (const auto& cyc : x.perm.cycles()) {
        SignedCycle sc;
        sc.support = cyc;
        for (int p : cyc) {
            covered[static_cast<size_t>(p)] = 1;
            sc.sign_bits.push_back(x.sign.bit(p));
            sc.parity ^= x.sign.bit(p);
        }
        out.push_back(std::move(sc));
    }
    for (int p = 0; p < x.rank(); ++p) {
        if (covered[static_cast<size_t>(p)] || !x.sign.bit(p)) continue;
        SignedCycle sc;
        sc.support = {p};
        sc.sign_bits = {1};
        sc.parity = 1;
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(),
              [](const SignedCycle& a, const SignedCycle& b) { return a.support[0] < b.support[0]; });
    return out;
}

WeylElement signed_cycle_element(int rank, const SignedCycle& c) {
    SignVector s(rank);
    for (size_t k = 0; k < c.support.size(); ++k)
        if (c.sign_bits[k]) s.set(c.support[k], 1);
    std::vector<std::vector<int>> cyc;
    if (c.support.size() > 1) cyc.push_back(c.support);
    return WeylElement{s, Permutation::from_cycles(rank, cyc)};
}

void for_each_element(const GroupSpec& spec,
                      const std::function<void(const WeylElement&)>& fn) {
    const int n = spec.rank;
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    do {
        Permutation p(img);
        if (spec.family == Family::A) {
            fn(WeylElement{SignVector(n), p});
        } else {
            for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
                if (spec.family == Family::D && (std::popcount(bits) & 1)) continue;
                SignVector s(n);
                for (int i = 0; i < n; ++i)
                    if ((bits >> i) & 1) s.set(i, 1);
                fn(WeylElement{s, p});
            }
        }
    } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<WeylElement> enumerate_group(const GroupSpec& spec, unsigned long long cutoff) {
    unsigned long long ord = spec.order();
    if (ord > cutoff)
        throw cutoff_error("group order " + std::to_string(ord) +
                           " exceeds cutoff " + std::to_string(cutoff));
    std::vector<WeylElement> out;
    out.reserve(static_cast<size_t>(ord));
    for_each_element(spec, [&](const WeylElement& x) { out.push_back(x); });
    return out;
}

std::vector<WeylElement> group_generators(const GroupSpec& spec) {
    const int n = spec.rank;
    std::vector<WeylElement> gens;
    for (int i = 0; i + 1 < n; ++i)
        gens.push_back(WeylElement{SignVector(n), Permutation::transposition(n, i, i + 1)});
    if (spec.family == Family::B) {
        SignVector s(n);
        s.set(0, 1);
        gens.push_back(WeylElement{s, Permutation(n)});
    } else if (spec.family == Family::D && n >= 2) {
        SignVector s(n);
        s.set(0, 1);
        s.set(1, 1);
        gens.push_back(WeylElement{s, Permutation(n)});
    }
    return gens;
}

std::string print_element(const WeylElement& x) {
    std::ostringstream os;
    os << x.sign.to_string() << "|" << print_permutation(x.perm);
    return os.str();
}

}  // namespace wn
