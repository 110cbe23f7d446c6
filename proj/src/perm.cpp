#include "wn/perm.hpp"

#include "wn/rat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wn {

Permutation::Permutation(int degree) : img_(static_cast<size_t>(degree)) {
    if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& g) const {
    if (degree() != g.degree())
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[static_cast<size_t>(i)] = (*this)(g(i));
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img_.size());
    for (int i = 0; i < degree(); ++i) out[static_cast<size_t>((*this)(i))] = i;
    return Permutation(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.compose(*this).compose(g.inverse());
}

int Permutation::order() const {
    long long ord = 1;
    for (const auto& c : cycles()) ord = lcm_ll(ord, static_cast<long long>(c.size()));
    return static_cast<int>(ord);
}

Permutation Permutation::extended(int degree) const {
    if (degree < this->degree())
        throw std::invalid_argument("Permutation::extended: smaller degree");
    std::vector<int> out(static_cast<size_t>(degree));
    std::iota(out.begin(), out.end(), 0);
    for (int i = 0; i < this->degree(); ++i) out[static_cast<size_t>(i)] = (*this)(i);
    return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    for (auto& c : cycles_with_fixed())
        if (c.size() > 1) out.push_back(std::move(c));
    return out;
}

std::vector<std::vector<int>> Permutation::cycles_with_fixed() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[static_cast<size_t>(j)] = 1;
            cyc.push_back(j);
            j = (*this)(j);
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p(degree);
    std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
    return p;
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(static_cast<size_t>(degree), 0);
    for (const auto& c : cycles) {
        for (size_t k = 0; k < c.size(); ++k) {
            int from = c[k], to = c[(k + 1) % c.size()];
            if (from < 0 || from >= degree || used[static_cast<size_t>(from)])
                throw std::invalid_argument("Permutation::from_cycles: bad cycles");
            used[static_cast<size_t>(from)] = 1;
            img[static_cast<size_t>(from)] = to;
        }
    }
    return Permutation(std::move(img));
}

int CycleType::degree() const {
    int n = 0;
    for (size_t i = 0; i < counts.size(); ++i)
        n += static_cast<int>(i + 1) * counts[i];
    return n;
}

long long CycleType::element_order() const {
    long long ord = 1;
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) ord = lcm_ll(ord, static_cast<long long>(i + 1));
    return ord;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << (i + 1) << '^' << counts[i];
    }
    if (first) os << "1^0";
    return os.str();
}

CycleType cycle_type(const Permutation& p) {
    CycleType t;
    t.counts.assign(static_cast<size_t>(std::max(p.degree(), 1)), 0);
    if (p.degree() == 0) return t;
    for (const auto& c : p.cycles_with_fixed()) ++t.counts[c.size() - 1];
    return t;
}

CycleType parse_cycle_type(const std::string& text) {
    CycleType t;
    std::istringstream is(text);
    std::string tok;
    int max_len = 0;
    std::vector<std::pair<int, int>> parts;
    while (is >> tok) {
        auto caret = tok.find('^');
        int len = 0, cnt = 1;
        try {
            if (caret == std::string::npos) {
                len = std::stoi(tok);
            } else {
                len = std::stoi(tok.substr(0, caret));
                cnt = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_cycle_type: bad token '" + tok + "'");
        }
        if (len < 1 || cnt < 0) throw std::invalid_argument("parse_cycle_type: bad token");
        parts.emplace_back(len, cnt);
        max_len = std::max(max_len, len);
    }
    if (parts.empty()) throw std::invalid_argument("parse_cycle_type: empty type");
    t.counts.assign(static_cast<size_t>(max_len), 0);
    for (auto [len, cnt] : parts) t.counts[static_cast<size_t>(len - 1)] += cnt;
    t.counts.resize(static_cast<size_t>(t.degree()), 0);
    return t;
}

std::string print_permutation(const Permutation& p) {
    auto cyc = p.cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) os << ' ';
            os << (c[k] + 1);
        }
        os << ')';
    }
    return os.str();
}

Permutation parse_permutation(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size() || text == "e" || text == "id")
        return Permutation(degree);
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(')
            throw std::invalid_argument("parse_permutation: expected '(' in '" + text + "'");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i == text.size())
                throw std::invalid_argument("parse_permutation: unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) ++i;
            if (start == i) throw std::invalid_argument("parse_permutation: expected point");
            int pt = std::stoi(text.substr(start, i - start));
            if (pt < 1 || pt > degree)
                throw std::invalid_argument("parse_permutation: point out of range");
            cyc.push_back(pt - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(degree, cycles);
}

}  // namespace wn
