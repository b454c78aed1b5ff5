#include "toricsg/numsgp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace toricsg {

bool NumericalSemigroup::member(i64 k) const {
    if (k < 0) return false;
    if (k >= conductor) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), k);
}

std::pair<i64, std::vector<i64>> normalize_generators(std::vector<i64> ks) {
    if (ks.empty()) throw EmptyInput{};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.front() <= 0) throw std::invalid_argument("generators must be positive");
    i64 d = 0;
    for (i64 k : ks) d = gcd_nonneg(d, k);
    std::vector<i64> reduced;
    reduced.reserve(ks.size());
    for (i64 k : ks) reduced.push_back(k / d);
    return {d, reduced};
}

NumericalSemigroup gap_analysis(std::vector<i64> reduced) {
    if (reduced.empty()) throw EmptyInput{};
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    i64 g = 0;
    for (i64 k : reduced) g = gcd_nonneg(g, k);
    if (g != 1) throw GcdNotOne{};

    NumericalSemigroup ns;
    ns.raw_generators = reduced;
    ns.d = 1;
    ns.reduced_generators = reduced;

    i64 q = reduced.front();
    if (q == 1) {
        ns.apery = {0};
        return ns;  // the full semigroup N
    }

    // Dijkstra over residues mod q: apery[r] is the least semigroup element
    // congruent to r, reachable as a shortest path 0 -> r with edge weights
    // the generators.
    const i64 INF = std::numeric_limits<i64>::max();
    std::vector<i64> dist(static_cast<std::size_t>(q), INF);
    dist[0] = 0;
    using Node = std::pair<i64, i64>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [v, r] = pq.top();
        pq.pop();
        if (v != dist[static_cast<std::size_t>(r)]) continue;
        for (i64 gen : reduced) {
            i64 nv = chk_add(v, gen);
            i64 nr = nv % q;
            if (nv < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nv;
                pq.push({nv, nr});
            }
        }
    }
    ns.apery = dist;

    i64 max_apery = *std::max_element(dist.begin(), dist.end());
    ns.frobenius = max_apery - q;
    ns.conductor = ns.frobenius + 1;
    for (i64 k = 1; k <= ns.frobenius; ++k)
        if (k < dist[static_cast<std::size_t>(k % q)]) ns.gaps.push_back(k);
    return ns;
}

NumericalSemigroup analyze_numerical_semigroup(std::vector<i64> ks) {
    auto [d, reduced] = normalize_generators(std::move(ks));
    NumericalSemigroup ns = gap_analysis(std::move(reduced));
    // restore the raw view
    ns.d = d;
    ns.raw_generators.clear();
    for (i64 k : ns.reduced_generators) ns.raw_generators.push_back(chk_mul(d, k));
    return ns;
}

}  // namespace toricsg
