#include "wn/squarecomm.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace wn {

namespace {

bool commutes_with(const WeylElement& x, const WeylElement& t) {
    return compose(x, t) == compose(t, x);
}

}  // namespace

bool square_commute(const ConjugacyClass& c1, const ConjugacyClass& c2) {
    if (c1.spec != c2.spec)
        throw std::invalid_argument("square_commute: classes over different groups");
    // stst = tsts for all s, t iff s tau s centralizes tau for all s in c1,
    // with tau any fixed element of c2.
    const WeylElement& tau = c2.representative;
    for (const auto& s : c1.elements) {
        WeylElement sts = compose(compose(s, tau), s);
        if (!commutes_with(sts, tau)) return false;
    }
    return true;
}

bool square_commute_full(const ConjugacyClass& c1, const ConjugacyClass& c2) {
    if (c1.spec != c2.spec)
        throw std::invalid_argument("square_commute_full: classes over different groups");
    for (const auto& s : c1.elements)
        for (const auto& t : c2.elements) {
            WeylElement st = compose(s, t);
            WeylElement ts = compose(t, s);
            if (compose(st, st) != compose(ts, ts)) return false;
        }
    return true;
}

std::optional<Witness> square_commute_witness(const ConjugacyClass& c1,
                                              const ConjugacyClass& c2) {
    for (const auto& s : c1.elements)
        for (const auto& t : c2.elements) {
            WeylElement st = compose(s, t);
            WeylElement ts = compose(t, s);
            if (compose(st, st) != compose(ts, ts)) return Witness{s, t};
        }
    return std::nullopt;
}

SquareCommReport enumerate_pairs(const GroupSpec& spec, unsigned long long cutoff,
                                 bool include_trivial, int workers) {
    SquareCommReport report;
    report.spec = spec;
    for (auto& c : conjugacy_classes(spec, cutoff)) {
        if (!include_trivial && c.representative.is_identity()) continue;
        report.classes.push_back(std::move(c));
    }
    const size_t k = report.classes.size();
    std::vector<std::pair<size_t, size_t>> grid;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) grid.emplace_back(i, j);
    report.pairs.assign(grid.size(), PairVerdict{});

    auto evaluate = [&](size_t cell) {
        auto [i, j] = grid[cell];
        PairVerdict v;
        v.first_class = i;
        v.second_class = j;
        v.square_commutative = square_commute(report.classes[i], report.classes[j]);
        if (!v.square_commutative)
            v.witness = square_commute_witness(report.classes[i], report.classes[j]);
        report.pairs[cell] = std::move(v);
    };

    if (workers <= 1) {
        for (size_t cell = 0; cell < grid.size(); ++cell) evaluate(cell);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t cell = next.fetch_add(1); cell < grid.size();
                     cell = next.fetch_add(1))
                    evaluate(cell);
            });
        for (auto& th : pool) th.join();
    }
    return report;
}

bool lifted_necessity_check(const GroupSpec& spec, unsigned long long cutoff,
                            int workers) {
    SquareCommReport upstairs = enumerate_pairs(spec, cutoff, true, workers);
    GroupSpec downstairs{Family::A, spec.rank};
    auto down_classes = conjugacy_classes(downstairs, cutoff);
    auto down_class_of = [&](const Permutation& p) -> const ConjugacyClass& {
        WeylElement x{SignVector(spec.rank), p};
        for (const auto& c : down_classes)
            if (c.contains(x)) return c;
        throw std::logic_error("lifted_necessity_check: projection class missing");
    };
    for (const auto& pv : upstairs.pairs) {
        if (!pv.square_commutative) continue;
        const auto& c1 = upstairs.classes[pv.first_class];
        const auto& c2 = upstairs.classes[pv.second_class];
        if (!square_commute(down_class_of(c1.representative.perm),
                            down_class_of(c2.representative.perm)))
            return false;
    }
    return true;
}

bool sign_condition_check(const GroupSpec& spec, unsigned long long cutoff) {
    if (spec.rank != 4 || spec.family == Family::A)
        throw std::invalid_argument("sign_condition_check: rank-4 B or D only");
    CycleType two_two = parse_cycle_type("2^2");
    std::vector<ConjugacyClass> over;
    for (auto& c : conjugacy_classes(spec, cutoff))
        if (cycle_type(c.representative.perm) == two_two) over.push_back(std::move(c));
    for (size_t i = 0; i < over.size(); ++i)
        for (size_t j = i; j < over.size(); ++j) {
            bool sq = square_commute(over[i], over[j]);
            bool same_parity = over[i].descriptor.total_parity == over[j].descriptor.total_parity;
            if (sq != same_parity) return false;
        }
    return !over.empty();
}

}  // namespace wn
