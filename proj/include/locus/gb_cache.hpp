#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locus/ideal.hpp"

namespace locus {

/// Process-wide Groebner cache: an in-memory content-addressed map plus an
/// optional on-disk text store.  Entries are keyed by the printed
/// (ring, generators, order) triple, so duplicates are identical and
/// last-writer-wins insertion is safe.
class GbStore {
public:
    struct Stats {
        std::size_t memory_hits = 0;
        std::size_t disk_hits = 0;
        std::size_t computed = 0;
    };

    /// dir = persistent directory (created if missing); nullopt = memory only.
    /// use_cache = false bypasses lookup entirely (--no-cache).
    void configure(std::optional<std::string> dir, bool use_cache);

    std::shared_ptr<const GroebnerBasis> get_or_compute(const RingPtr& ring,
                                                        const std::vector<Polynomial>& gens,
                                                        const MonomialOrder& ord);

    Stats stats() const;
    void reset_stats();

    static std::string cache_key(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                 const MonomialOrder& ord);
    static std::string key_hash_hex(const std::string& key);

private:
    struct Impl;
    Impl& impl();
};

GbStore& gb_store();

} // namespace locus
