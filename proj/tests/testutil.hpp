#pragma once

#include <cstdint>
#include <vector>

#include "mrlrc/field.hpp"

namespace testutil {

// splitmix64: identical sequences on every platform, so seeded cases reproduce
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    mrlrc::Elem elem(const mrlrc::FieldPtr& f) { return below(f->order()); }

    mrlrc::Elem nonzero(const mrlrc::FieldPtr& f) { return 1 + below(f->order() - 1); }

    std::vector<mrlrc::Elem> distinct(const mrlrc::FieldPtr& f, std::size_t k) {
        std::vector<mrlrc::Elem> out;
        while (out.size() < k) {
            mrlrc::Elem e = elem(f);
            bool fresh = true;
            for (mrlrc::Elem v : out)
                if (v == e) { fresh = false; break; }
            if (fresh) out.push_back(e);
        }
        return out;
    }
};

} // namespace testutil
