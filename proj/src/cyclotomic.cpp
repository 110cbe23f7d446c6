#include "wn/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wn {

namespace {

// Exact division of integer polynomials, used to build Phi_m from x^m - 1.
std::vector<long long> poly_div_exact(const std::vector<long long>& num,
                                      const std::vector<long long>& den) {
    std::vector<long long> rem = num;
    const int dn = static_cast<int>(den.size()) - 1;
    const int dq = static_cast<int>(rem.size()) - 1 - dn;
    if (dq < 0) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<long long> quot(dq + 1, 0);
    for (int i = dq; i >= 0; --i) {
        long long lead = rem[i + dn];
        if (lead % den[dn] != 0) throw std::logic_error("poly_div_exact: not exact");
        long long q = lead / den[dn];
        quot[i] = q;
        for (int j = 0; j <= dn; ++j) rem[i + j] -= q * den[j];
    }
    for (long long c : rem)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mtx;
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e; fill divisors
    // in increasing order so every proper divisor is cached when needed.
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<long long> acc(d + 1, 0);
        acc[0] = -1;
        acc[d] = 1;  // x^d - 1
        for (int e = 1; e < d; ++e)
            if (d % e == 0) acc = poly_div_exact(acc, cache.at(e));
        cache[d] = std::move(acc);
    }
    return cache.at(m);
}

Cyclo Cyclo::from_exponents(int order, const std::vector<Rat>& poly) {
    const auto& phi = cyclotomic_polynomial(order);
    const int deg = static_cast<int>(phi.size()) - 1;
    // Reduce modulo x^order - 1 first, then modulo Phi_order.
    std::vector<Rat> rem(std::max<size_t>(poly.size(), 1), Rat(0));
    for (size_t k = 0; k < poly.size(); ++k) rem[k] = poly[k];
    if (static_cast<int>(rem.size()) > order) {
        std::vector<Rat> folded(order, Rat(0));
        for (size_t k = 0; k < rem.size(); ++k) folded[k % order] += rem[k];
        rem = std::move(folded);
    }
    if (static_cast<int>(rem.size()) < deg) rem.resize(deg, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= deg; --i) {
        Rat lead = rem[i];
        if (lead == Rat(0)) continue;
        rem[i] = Rat(0);
        for (int j = 0; j < deg; ++j) rem[i - deg + j] -= lead * Rat(phi[j]);
    }
    rem.resize(deg);
    return Cyclo(order, std::move(rem));
}

Cyclo Cyclo::rational(const Rat& r) {
    return Cyclo(1, std::vector<Rat>{r});
}

Cyclo Cyclo::root(int order, long long k) {
    if (order < 1) throw std::invalid_argument("Cyclo::root: order must be >= 1");
    long long e = k % order;
    if (e < 0) e += order;
    std::vector<Rat> poly(static_cast<size_t>(e) + 1, Rat(0));
    poly[static_cast<size_t>(e)] = Rat(1);
    return from_exponents(order, poly);
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeff_)
        if (c != Rat(0)) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != Rat(0)) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclo: value is not rational");
    return coeff_.empty() ? Rat(0) : coeff_[0];
}

Cyclo Cyclo::promoted(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::invalid_argument("Cyclo::promoted: new order must be a multiple");
    const int stride = new_order / order_;
    std::vector<Rat> poly(static_cast<size_t>(new_order), Rat(0));
    for (size_t k = 0; k < coeff_.size(); ++k)
        poly[k * static_cast<size_t>(stride)] += coeff_[k];
    return from_exponents(new_order, poly);
}

Cyclo Cyclo::conj() const {
    std::vector<Rat> poly(static_cast<size_t>(order_), Rat(0));
    for (size_t k = 0; k < coeff_.size(); ++k) {
        size_t e = (k == 0) ? 0 : static_cast<size_t>(order_) - k;
        poly[e] += coeff_[k];
    }
    return from_exponents(order_, poly);
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    int m = static_cast<int>(lcm_ll(order_, o.order_));
    Cyclo a = promoted(m), b = o.promoted(m);
    std::vector<Rat> sum = a.coeff_;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += b.coeff_[i];
    return Cyclo(m, std::move(sum));
}

Cyclo Cyclo::operator-() const {
    std::vector<Rat> neg = coeff_;
    for (auto& c : neg) c = -c;
    return Cyclo(order_, std::move(neg));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    int m = static_cast<int>(lcm_ll(order_, o.order_));
    Cyclo a = promoted(m), b = o.promoted(m);
    std::vector<Rat> prod(a.coeff_.size() + b.coeff_.size(), Rat(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i] == Rat(0)) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j) {
            if (b.coeff_[j] == Rat(0)) continue;
            prod[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return from_exponents(m, prod);
}

Cyclo Cyclo::scaled(const Rat& r) const {
    std::vector<Rat> out = coeff_;
    for (auto& c : out) c *= r;
    return Cyclo(order_, std::move(out));
}

bool Cyclo::operator==(const Cyclo& o) const {
    int m = static_cast<int>(lcm_ll(order_, o.order_));
    return promoted(m).coeff_ == o.promoted(m).coeff_;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return wn::to_string(coeff_.empty() ? Rat(0) : coeff_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        if (coeff_[k] == Rat(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << wn::to_string(coeff_[k]);
        if (k > 0) os << "*z" << order_ << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace wn
