#include "wn/rep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wn {

Matrix mat_identity(int d) {
    Matrix m(static_cast<size_t>(d), std::vector<Cyclo>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Cyclo::integer(1);
    return m;
}

Matrix mat_zero(int rows, int cols) {
    return Matrix(static_cast<size_t>(rows), std::vector<Cyclo>(static_cast<size_t>(cols)));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Cyclo>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    return out;
}

Matrix mat_kron(const Matrix& a, const Matrix& b) {
    const size_t ra = a.size(), ca = ra ? a[0].size() : 0;
    const size_t rb = b.size(), cb = rb ? b[0].size() : 0;
    Matrix out(ra * rb, std::vector<Cyclo>(ca * cb));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ca; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t p = 0; p < rb; ++p)
                for (size_t q = 0; q < cb; ++q)
                    out[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
        }
    return out;
}

Matrix mat_scaled(const Matrix& a, const Cyclo& c) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& v : row) v *= c;
    return out;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Cyclo mat_trace(const Matrix& a) {
    Cyclo t;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

bool is_scalar_matrix(const Matrix& a, Cyclo* scalar_out) {
    if (a.empty()) return false;
    const Cyclo& s = a[0][0];
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (i == j && a[i][j] != s) return false;
            if (i != j && !a[i][j].is_zero()) return false;
        }
    if (scalar_out) *scalar_out = s;
    return true;
}

bool is_minus_identity(const Matrix& a) {
    Cyclo s;
    return is_scalar_matrix(a, &s) && s == Cyclo::integer(-1);
}

Rep::Rep(const FiniteGroup* group, int dim, std::vector<Matrix> images)
    : group_(group), dim_(dim), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != group_->size())
        throw std::invalid_argument("Rep: one image per group element required");
}

Rep Rep::one_dim(const FiniteGroup& g,
                 const std::function<Cyclo(const SdpElement&)>& value) {
    std::vector<Matrix> images;
    images.reserve(static_cast<size_t>(g.size()));
    for (const auto& e : g.elements()) images.push_back(Matrix{{value(e)}});
    return Rep(&g, 1, std::move(images));
}

Rep Rep::trivial(const FiniteGroup& g) {
    return one_dim(g, [](const SdpElement&) { return Cyclo::integer(1); });
}

Rep Rep::sign_of_perm(const FiniteGroup& g) {
    return one_dim(g, [](const SdpElement& e) {
        return Cyclo::integer(perm_parity(e.perm) ? -1 : 1);
    });
}

const Matrix& Rep::at(const SdpElement& x) const {
    int i = group_->index_of(x);
    if (i < 0) throw std::invalid_argument("Rep::at: element not in group");
    return at_index(i);
}

std::vector<Cyclo> Rep::character() const {
    std::vector<Cyclo> chi;
    chi.reserve(images_.size());
    for (const auto& m : images_) chi.push_back(mat_trace(m));
    return chi;
}

Rep Rep::tensor(const Rep& other) const {
    if (group_ != other.group_ && group_->elements() != other.group_->elements())
        throw std::invalid_argument("Rep::tensor: different groups");
    std::vector<Matrix> images;
    images.reserve(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        images.push_back(mat_kron(images_[i], other.images_[i]));
    return Rep(group_, dim_ * other.dim_, std::move(images));
}

Rep Rep::restricted(const FiniteGroup& sub) const {
    std::vector<Matrix> images;
    images.reserve(static_cast<size_t>(sub.size()));
    for (const auto& e : sub.elements()) images.push_back(at(e));
    return Rep(&sub, dim_, std::move(images));
}

Rep Rep::induced(const FiniteGroup& big) const {
    const FiniteGroup& h = *group_;
    std::vector<int> ts = big.left_transversal(h);
    const int k = static_cast<int>(ts.size());
    std::vector<Matrix> images;
    images.reserve(static_cast<size_t>(big.size()));
    for (int g = 0; g < big.size(); ++g) {
        Matrix m = mat_zero(k * dim_, k * dim_);
        for (int i = 0; i < k; ++i) {
            int gi = big.mul(big.inv(ts[static_cast<size_t>(i)]), g);
            for (int j = 0; j < k; ++j) {
                int x = big.mul(gi, ts[static_cast<size_t>(j)]);
                int hx = h.index_of(big.element(x));
                if (hx < 0) continue;
                const Matrix& block = at_index(hx);
                for (int p = 0; p < dim_; ++p)
                    for (int q = 0; q < dim_; ++q)
                        m[static_cast<size_t>(i * dim_ + p)][static_cast<size_t>(j * dim_ + q)] =
                            block[static_cast<size_t>(p)][static_cast<size_t>(q)];
            }
        }
        images.push_back(std::move(m));
    }
    return Rep(&big, k * dim_, std::move(images));
}

bool Rep::is_homomorphism() const {
    for (int i = 0; i < group_->size(); ++i)
        for (int j = 0; j < group_->size(); ++j)
            if (!mat_equal(mat_mul(at_index(i), at_index(j)), at_index(group_->mul(i, j))))
                return false;
    return true;
}

bool Rep::spot_check(int samples, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, group_->size() - 1);
    for (int s = 0; s < samples; ++s) {
        int i = pick(rng), j = pick(rng);
        if (!mat_equal(mat_mul(at_index(i), at_index(j)), at_index(group_->mul(i, j))))
            return false;
    }
    return true;
}

int perm_parity(const Permutation& p) {
    int transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions & 1;
}

Cyclo char_inner_product(const FiniteGroup& g, const std::vector<Cyclo>& a,
                         const std::vector<Cyclo>& b) {
    Cyclo sum;
    for (int i = 0; i < g.size(); ++i)
        sum += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)].conj();
    return sum.scaled(Rat(1, g.size()));
}

bool is_irreducible_character(const FiniteGroup& g, const std::vector<Cyclo>& chi) {
    return char_inner_product(g, chi, chi) == Cyclo::integer(1);
}

std::vector<Rep> one_dimensional_reps(const FiniteGroup& g) {
    std::vector<int> gens = g.small_generating_set();
    if (gens.empty()) return {Rep::trivial(g)};

    std::vector<int> orders;
    for (int i : gens) orders.push_back(g.element_order(i));

    std::vector<Rep> out;
    std::vector<int> choice(gens.size(), 0);
    while (true) {
        // Propagate the generator assignment across the group; values are
        // exponents of zeta_e with e = lcm of generator orders.
        long long e = 1;
        for (int o : orders) e = lcm_ll(e, o);
        std::vector<long long> val(static_cast<size_t>(g.size()), -1);
        val[static_cast<size_t>(g.identity_index())] = 0;
        bool ok = true;
        std::vector<int> frontier{g.identity_index()};
        while (!frontier.empty() && ok) {
            std::vector<int> next;
            for (int x : frontier) {
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    long long step = choice[gi] * (e / orders[gi]);
                    for (int sign : {0, 1}) {
                        int y = sign ? g.mul(gens[gi], x) : g.mul(x, gens[gi]);
                        long long v = (val[static_cast<size_t>(x)] + step) % e;
                        if (val[static_cast<size_t>(y)] < 0) {
                            val[static_cast<size_t>(y)] = v;
                            next.push_back(y);
                        } else if (val[static_cast<size_t>(y)] != v) {
                            ok = false;
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        if (ok) {
            // Verify full multiplicativity on exponents before accepting.
            for (int i = 0; i < g.size() && ok; ++i)
                for (int j = 0; j < g.size() && ok; ++j)
                    if ((val[static_cast<size_t>(i)] + val[static_cast<size_t>(j)]) % e !=
                        val[static_cast<size_t>(g.mul(i, j))])
                        ok = false;
        }
        if (ok) {
            std::vector<Matrix> images;
            images.reserve(static_cast<size_t>(g.size()));
            for (int i = 0; i < g.size(); ++i)
                images.push_back(Matrix{{Cyclo::root(static_cast<int>(e),
                                                     val[static_cast<size_t>(i)])}});
            out.push_back(Rep(&g, 1, std::move(images)));
        }
        // Next assignment.
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == orders[k]) {
            choice[k] = 0;
            ++k;
        }
        if (k == choice.size()) break;
    }
    return out;
}

namespace {

bool character_known(const FiniteGroup& g, const std::vector<std::vector<Cyclo>>& known,
                     const std::vector<Cyclo>& chi) {
    for (const auto& k : known)
        if (char_inner_product(g, chi, k) != Cyclo::integer(0)) return true;
    return false;
}

}  // namespace

std::vector<Rep> all_irreducibles(const FiniteGroup& g) {
    std::vector<Rep> found;
    std::vector<std::vector<Cyclo>> chars;
    long long sumsq = 0;
    auto offer = [&](Rep r) {
        if (static_cast<long long>(r.dim()) * r.dim() + sumsq > g.size()) return;
        auto chi = r.character();
        if (!is_irreducible_character(g, chi)) return;
        if (character_known(g, chars, chi)) return;
        sumsq += static_cast<long long>(r.dim()) * r.dim();
        chars.push_back(std::move(chi));
        found.push_back(std::move(r));
    };

    std::vector<Rep> one_dims = one_dimensional_reps(g);
    for (const auto& r : one_dims) offer(r);
    if (sumsq == g.size()) return found;

    // Induced one-dimensionals from small subgroups, largest subgroup first
    // (smallest induced dimension). Induced and tensored results carry
    // images over g itself, so the subgroups only need to live here.
    std::vector<FiniteGroup> subs = g.one_and_two_generated_subgroups();
    std::stable_sort(subs.begin(), subs.end(),
                     [](const FiniteGroup& a, const FiniteGroup& b) { return a.size() > b.size(); });
    for (const FiniteGroup& h : subs) {
        if (sumsq == g.size()) break;
        if (h.size() == g.size()) continue;
        for (const auto& r : one_dimensional_reps(h)) {
            offer(r.induced(g));
            if (sumsq == g.size()) break;
        }
        // Tensoring with the group's one-dimensionals reaches twins cheaply.
        for (size_t fi = 0; fi < found.size() && sumsq < g.size(); ++fi)
            for (const auto& od : one_dims) {
                if (sumsq == g.size()) break;
                offer(found[fi].tensor(od));
            }
    }
    if (sumsq != g.size())
        throw std::runtime_error("all_irreducibles: search incomplete for group of order " +
                                 std::to_string(g.size()));
    return found;
}

bool contains_as_subrepresentation(const Rep& sub, const Rep& big) {
    if (!big.group().contains_all(sub.group()))
        throw std::invalid_argument("contains_as_subrepresentation: group mismatch");
    Rep res = big.restricted(sub.group());
    Cyclo mult = char_inner_product(sub.group(), res.character(), sub.character());
    if (!mult.is_rational() || !is_integer(mult.rational_value()))
        throw std::logic_error("contains_as_subrepresentation: non-integral multiplicity");
    return mult.rational_value() >= Rat(1);
}

}  // namespace wn
