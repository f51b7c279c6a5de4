#include "discrimlab/nvg.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

namespace discrimlab {

TSet::TSet(std::size_t n, std::size_t k, Family members) : n_(n), k_(k), members_(std::move(members)) {
    if (members_.size() < 2) throw PreconditionError("a T-set needs at least two members");
    std::set<std::uint64_t> seen;
    for (auto L : members_) {
        if (L.size() != k + 1) throw PreconditionError("T-set member " + L.to_string() + " is not a (k+1)-subset");
        if (L.bound() > n) throw PreconditionError("T-set member " + L.to_string() + " is not inside [n]");
        if (!seen.insert(L.mask()).second) throw PreconditionError("repeated T-set member " + L.to_string());
    }
}

bool is_r_set(const TSet& T) {
    const auto& m = T.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if ((m[i] & m[j]).empty()) return false;
    // Dropping any one member keeps the union iff every element is covered twice.
    IndexSet once;
    IndexSet twice;
    for (auto L : m) {
        twice = twice | (once & L);
        once = once | L;
    }
    return once == twice;
}

void for_each_r_set(std::size_t n, std::size_t k, std::size_t r, const std::function<bool(const TSet&)>& visit) {
    if (r < 2) throw PreconditionError("enumerate_r_sets: r must be at least 2");
    if (k + 1 > n) throw PreconditionError("enumerate_r_sets: need k+1 <= n");
    const auto pool = subsets_of_size(n, k + 1);
    Family chosen;
    chosen.reserve(r);
    bool stop = false;
    // depth-first over increasing pool indices; a new member must meet all chosen ones
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        if (stop) return;
        if (chosen.size() == r) {
            TSet T(n, k, chosen);
            if (is_r_set(T) && !visit(T)) stop = true;
            return;
        }
        const std::size_t remaining = r - chosen.size();
        for (std::size_t i = start; i + remaining <= pool.size() && !stop; ++i) {
            const IndexSet cand = pool[i];
            if (std::any_of(chosen.begin(), chosen.end(), [&](IndexSet c) { return (c & cand).empty(); })) continue;
            chosen.push_back(cand);
            extend(i + 1);
            chosen.pop_back();
        }
    };
    extend(0);
}

std::vector<TSet> enumerate_r_sets(std::size_t n, std::size_t k, std::size_t r) {
    std::vector<TSet> out;
    for_each_r_set(n, k, r, [&](const TSet& T) {
        out.push_back(T);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------

MissingVertex::MissingVertex(std::size_t member)
    : std::runtime_error("vertex P_" + std::to_string(member + 1) + " does not exist for this translate"),
      member_(member) {}

OnlyCentral::OnlyCentral() : std::runtime_error("every translate in the intersection is central") {}

bool KTConfiguration::degenerate() const {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) return true;
    return false;
}

KTConfiguration kt_configuration(const CentralArrangement& a, const Translate& t, const TSet& T) {
    if (T.n() != a.n() || T.k() != a.k()) throw PreconditionError("T-set context does not match the arrangement");
    KTConfiguration out;
    for (std::size_t i = 0; i < T.r(); ++i) {
        auto p = common_point(a, t, T[i]);
        if (!p) throw MissingVertex(i);
        for (std::size_t q = 0; q < a.n(); ++q) {
            if (T[i].contains(q)) continue;
            if (dot(a.normal(q), *p) == t.values[q]) out.violations.push_back({i, q});
        }
        out.points.push_back(std::move(*p));
    }
    for (std::size_t i = 0; i < T.r(); ++i) {
        for (std::size_t j = i + 1; j < T.r(); ++j) {
            Vec dir(a.k());
            for (std::size_t c = 0; c < a.k(); ++c) dir[c] = out.points[j][c] - out.points[i][c];
            out.edges.push_back({i, j, std::move(dir)});
        }
    }
    return out;
}

Translate witness_translate(const DiscriminantalArrangement& d, const TSet& T) {
    const Flat flat = flat_of(d, T.members());
    const Subspace central = central_subspace(d.base());
    for (std::size_t i = 0; i < flat.subspace.dim(); ++i) {
        auto v = flat.subspace.basis_vector(i);
        if (!in_span(v, central)) return Translate{std::move(v)};
    }
    throw OnlyCentral();
}

Translate witness_translate(const CentralArrangement& a, const TSet& T) {
    return witness_translate(DiscriminantalArrangement(a), T);
}

// ---------------------------------------------------------------------------

std::optional<DependencyCertificate> certify_rs_dependency(const DiscriminantalArrangement& d, const TSet& T,
                                                           std::size_t l, const Family& S_l, std::size_t pivot) {
    if (T.n() != d.n() || T.k() != d.k()) throw PreconditionError("T-set context does not match the arrangement");
    if (!is_r_set(T)) throw PreconditionError("certify: " + to_string(T.members()) + " is not an r-set");
    const IndexSet U = family_union(T.members());
    const IndexSet X = family_intersection(T.members());
    if (!U.contains(l) || X.contains(l))
        throw PreconditionError("certify: l = " + std::to_string(l + 1) + " must lie in the union but not in every member");
    if (S_l.size() < 2) throw PreconditionError("certify: S_l needs at least two members");
    if (pivot >= S_l.size()) throw PreconditionError("certify: pivot out of range");
    std::set<std::uint64_t> in_S;
    for (auto L : S_l) {
        if (!L.contains(l)) throw PreconditionError("certify: S_l member " + L.to_string() + " does not contain l");
        if (std::find(T.members().begin(), T.members().end(), L) == T.members().end())
            throw PreconditionError("certify: S_l member " + L.to_string() + " is not in T");
        if (!in_S.insert(L.mask()).second) throw PreconditionError("certify: repeated S_l member " + L.to_string());
    }

    Mat base_rows(0, d.n());
    for (auto L : T.members())
        if (!in_S.count(L.mask())) base_rows.push_row(d.normal(L).coeffs);
    const Subspace base = Subspace::span_of(base_rows);

    const Vec& cj = d.normal(S_l[pivot]).coeffs;
    // (i) moving H_l to meet the pivot member is a genuine extra condition
    if (in_span(cj, base)) return std::nullopt;
    // (ii) on the base flat, the t_l that solves the pivot solves every member
    for (auto L : S_l) {
        const Vec& ci = d.normal(L).coeffs;
        const Rational ratio = ci[l] / cj[l];
        Vec f(d.n());
        for (std::size_t c = 0; c < d.n(); ++c) f[c] = ci[c] - ratio * cj[c];
        if (!in_span(f, base)) return std::nullopt;
    }

    DependencyCertificate cert{T, l, S_l, S_l.size(), base.dim(), 0, 0};
    Mat full_rows = base.basis();
    full_rows.push_row(cj);
    cert.rank_full = rank(full_rows);
    cert.flat_rank = d.normal_span(T.members()).dim();
    return cert;
}

std::optional<DependencyCertificate> certify_rs_dependency(const CentralArrangement& a, const TSet& T, std::size_t l,
                                                           const Family& S_l) {
    return certify_rs_dependency(DiscriminantalArrangement(a), T, l, S_l);
}

std::vector<std::pair<std::size_t, Family>> admissible_choices(const TSet& T) {
    std::vector<std::pair<std::size_t, Family>> out;
    const IndexSet candidates = family_union(T.members()) - family_intersection(T.members());
    for (auto l : candidates.elements()) {
        std::vector<std::size_t> holders;
        for (std::size_t i = 0; i < T.r(); ++i)
            if (T[i].contains(l)) holders.push_back(i);
        for (std::size_t s = 2; s <= holders.size(); ++s) {
            for (auto pick : subsets_of_size(holders.size(), s)) {
                Family S_l;
                for (auto h : pick.elements()) S_l.push_back(T[holders[h]]);
                out.emplace_back(l, std::move(S_l));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool ls_dependency_check(const CentralArrangement& a, const TSet& T) {
    const std::size_t n = a.n();
    const std::size_t k = a.k();
    if (n % 3 != 0 || n < 6) throw PreconditionError("ls_dependency_check: need n = 3s with s >= 2");
    const std::size_t s = n / 3;
    if (k != 2 * s - 1) throw PreconditionError("ls_dependency_check: need k = 2s - 1");
    if (T.r() != 3) throw PreconditionError("ls_dependency_check: T must have exactly three members");
    if (T.n() != n || T.k() != k) throw PreconditionError("T-set context does not match the arrangement");
    if (family_union(T.members()).size() != n) throw PreconditionError("ls_dependency_check: members must cover [n]");

    Subspace total(k);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const IndexSet meet = T[i] & T[j];
            if (meet.size() != s) throw PreconditionError("ls_dependency_check: pairwise intersections must have size s");
            total = subspace_sum(total, kernel_basis(a.normal_rows(meet)));
        }
    }
    return total.dim() == 2 * s - 2;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<NvgFinding> examine(const DiscriminantalArrangement& d, SimplicityChecker& checker, const TSet& T) {
    const std::size_t rk = d.normal_span(T.members()).dim();
    if (rk >= T.r() || !checker.is_simple(T.members())) return std::nullopt;
    NvgFinding f{T, rk, {}};
    for (auto& [l, S_l] : admissible_choices(T))
        if (auto cert = certify_rs_dependency(d, T, l, S_l)) f.certificates.push_back(std::move(*cert));
    return f;
}

}  // namespace

std::vector<NvgFinding> find_simple_nvg(const DiscriminantalArrangement& d, std::size_t r_max, std::size_t jobs) {
    if (r_max < 2) throw PreconditionError("find_simple_nvg: r_max must be at least 2");
    jobs = std::max<std::size_t>(jobs, 1);
    std::vector<NvgFinding> out;
    for (std::size_t r = 3; r <= r_max; ++r) {
        const auto candidates = enumerate_r_sets(d.n(), d.k(), r);
        std::vector<std::vector<std::pair<std::size_t, NvgFinding>>> parts(jobs);
        auto work = [&](std::size_t w) {
            SimplicityChecker checker(d);
            for (std::size_t i = w; i < candidates.size(); i += jobs)
                if (auto f = examine(d, checker, candidates[i])) parts[w].emplace_back(i, std::move(*f));
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        }
        std::vector<std::pair<std::size_t, NvgFinding>> merged;
        for (auto& p : parts)
            for (auto& e : p) merged.push_back(std::move(e));
        std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& e : merged) out.push_back(std::move(e.second));
    }
    return out;
}

std::vector<NvgFinding> find_simple_nvg(const CentralArrangement& a, std::size_t r_max, std::size_t jobs) {
    return find_simple_nvg(DiscriminantalArrangement(a), r_max, jobs);
}

}  // namespace discrimlab
