#include "toricsg/ensemble.hpp"

#include <random>

#include "toricsg/semigroup.hpp"

namespace toricsg {

namespace {

// Rejection-sampled bounded draw; avoids the implementation-defined
// behaviour of std::uniform_int_distribution so seeds are portable.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

}  // namespace

std::vector<InstanceSpec> generate_ensemble(int count, std::uint64_t seed, i64 coord_max) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (coord_max < 1) throw std::invalid_argument("coord_max must be >= 1");

    std::mt19937_64 rng(seed);
    std::uint64_t range = static_cast<std::uint64_t>(2 * coord_max + 1);
    auto coord = [&] { return static_cast<i64>(draw_below(rng, range)) - coord_max; };

    std::vector<InstanceSpec> out;
    const long attempt_cap = 20000L * count;
    for (long attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
        if (attempt >= attempt_cap) throw ExhaustedSampling{};
        std::size_t n = 2 + draw_below(rng, 5);  // 2..6 generators
        std::vector<Vec2> gens;
        while (gens.size() < n) {
            Vec2 g{coord(), coord()};
            if (!g.is_zero()) gens.push_back(g);
        }
        try {
            (void)ToricSemigroup::validate(gens);
        } catch (const ValidationError&) {
            continue;
        }
        InstanceSpec spec;
        spec.label = "instance-" + std::to_string(out.size());
        spec.generators = std::move(gens);
        out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace toricsg
