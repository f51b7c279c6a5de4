#include "discrimlab/lattice.hpp"

#include "sharding.hpp"

#include <set>
#include <string>

namespace discrimlab {

SetFamily::SetFamily(std::size_t n, std::size_t k, Family members) : n_(n), k_(k), members_(std::move(members)) {
    std::set<std::uint64_t> seen;
    for (auto s : members_) {
        if (s.size() < k + 1) throw PreconditionError("family member " + s.to_string() + " has fewer than k+1 elements");
        if (s.bound() > n) throw PreconditionError("family member " + s.to_string() + " is not inside [n]");
        if (!seen.insert(s.mask()).second) throw PreconditionError("repeated family member " + s.to_string());
    }
}

bool athanasiadis_condition(const SetFamily& f) {
    const auto& S = f.members();
    const std::size_t m = S.size();
    if (m >= 64) throw PreconditionError("athanasiadis_condition: family too large");
    for (std::uint64_t I = 1; I < (std::uint64_t{1} << m); ++I) {
        if (std::popcount(I) < 2) continue;
        IndexSet u;
        std::size_t bound = f.k();
        for (std::size_t i = 0; i < m; ++i) {
            if (((I >> i) & 1U) == 0) continue;
            u = u | S[i];
            bound += S[i].size() - f.k();
        }
        if (u.size() <= bound) return false;
    }
    return true;
}

std::size_t expected_rank(const SetFamily& f) {
    if (!athanasiadis_condition(f))
        throw PreconditionError("expected_rank: family " + to_string(f.members()) + " violates the very generic condition");
    std::size_t r = 0;
    for (auto s : f.members()) r += s.size() - f.k();
    return r;
}

namespace {

Family family_from(const DiscriminantalArrangement& d, const std::vector<std::size_t>& idx) {
    Family T;
    T.reserve(idx.size());
    for (auto i : idx) T.push_back(d.hyperplanes()[i].L);
    return T;
}

}  // namespace

Verdict very_generic_upto(const DiscriminantalArrangement& d, std::size_t r_max, std::size_t jobs) {
    if (r_max < 2) throw PreconditionError("very_generic_upto: r_max must be at least 2");
    const std::size_t count = d.hyperplanes().size();
    Verdict v;
    v.r_max = r_max;
    for (std::size_t r = 2; r <= r_max && r <= count; ++r) {
        const auto hit = detail::first_hit(count, r, jobs, [&](std::size_t) {
            return [&d, r, checker = SimplicityChecker(d)](const std::vector<std::size_t>& idx) mutable {
                const Family T = family_from(d, idx);
                // rank is the cheap filter; simplicity only matters for defects
                if (d.normal_span(T).dim() >= r) return false;
                return checker.is_simple(T);
            };
        });
        if (hit != detail::kNoOrdinal) {
            v.witness = family_from(d, detail::combination_at(count, r, hit));
            v.rank = d.normal_span(*v.witness).dim();
            return v;
        }
    }
    return v;
}

Verdict very_generic_upto(const CentralArrangement& a, std::size_t r_max, std::size_t jobs) {
    return very_generic_upto(DiscriminantalArrangement(a), r_max, jobs);
}

void for_each_simple_family(const DiscriminantalArrangement& d, std::size_t r_max,
                            const std::function<bool(const Family&, std::size_t)>& visit) {
    const std::size_t count = d.hyperplanes().size();
    SimplicityChecker checker(d);
    for (std::size_t r = 2; r <= r_max && r <= count; ++r) {
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        do {
            const Family T = family_from(d, idx);
            if (checker.is_simple(T) && !visit(T, d.normal_span(T).dim())) return;
        } while (next_combination(idx, count));
    }
}

}  // namespace discrimlab
