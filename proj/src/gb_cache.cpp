#include "locus/gb_cache.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace locus {

struct GbStore::Impl {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> memory;
    std::optional<std::string> dir;
    bool use_cache = true;
    Stats stats;
};

GbStore::Impl& GbStore::impl() {
    static Impl instance;
    return instance;
}

GbStore& gb_store() {
    static GbStore store;
    return store;
}

void GbStore::configure(std::optional<std::string> dir, bool use_cache) {
    Impl& im = impl();
    std::lock_guard<std::mutex> lk(im.mu);
    im.dir = std::move(dir);
    im.use_cache = use_cache;
    if (im.dir) std::filesystem::create_directories(*im.dir);
}

GbStore::Stats GbStore::stats() const {
    Impl& im = const_cast<GbStore*>(this)->impl();
    std::lock_guard<std::mutex> lk(im.mu);
    return im.stats;
}

void GbStore::reset_stats() {
    Impl& im = impl();
    std::lock_guard<std::mutex> lk(im.mu);
    im.stats = Stats{};
}

std::string GbStore::cache_key(const RingPtr& ring, const std::vector<Polynomial>& gens,
                               const MonomialOrder& ord) {
    std::string key = ring->to_string() + "|" + ord.to_string() + "|";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) key += " ; ";
        key += gens[i].to_string();
    }
    return key;
}

std::string GbStore::key_hash_hex(const std::string& key) {
    // FNV-1a, 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str();
}

namespace {

std::shared_ptr<const GroebnerBasis> load_from_file(const std::string& path, const std::string& key,
                                                    const RingPtr& ring, const MonomialOrder& ord) {
    std::ifstream in(path);
    if (!in) return nullptr;
    std::string line;
    if (!std::getline(in, line) || line != "locus-gb-cache 1") return nullptr;
    if (!std::getline(in, line) || line != "key: " + key) return nullptr;
    if (!std::getline(in, line) || line.rfind("basis: ", 0) != 0) return nullptr;
    std::size_t count = std::stoul(line.substr(7));
    auto gb = std::make_shared<GroebnerBasis>();
    gb->order = ord;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) return nullptr;
        gb->elements.push_back(parse_polynomial(ring, line));
    }
    return gb;
}

void save_to_file(const std::string& path, const std::string& key, const GroebnerBasis& gb) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "locus-gb-cache 1\n";
        out << "key: " << key << "\n";
        out << "basis: " << gb.elements.size() << "\n";
        for (const Polynomial& g : gb.elements) out << g.to_string() << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec); // atomic last-writer-wins
}

} // namespace

std::shared_ptr<const GroebnerBasis> GbStore::get_or_compute(const RingPtr& ring,
                                                             const std::vector<Polynomial>& gens,
                                                             const MonomialOrder& ord) {
    Impl& im = impl();
    const std::string key = cache_key(ring, gens, ord);

    std::optional<std::string> dir;
    bool use_cache;
    {
        std::lock_guard<std::mutex> lk(im.mu);
        use_cache = im.use_cache;
        dir = im.dir;
        if (use_cache) {
            auto it = im.memory.find(key);
            if (it != im.memory.end()) {
                ++im.stats.memory_hits;
                return it->second;
            }
        }
    }

    std::string path;
    if (use_cache && dir) {
        path = *dir + "/" + key_hash_hex(key) + ".gb";
        if (auto gb = load_from_file(path, key, ring, ord)) {
            std::lock_guard<std::mutex> lk(im.mu);
            ++im.stats.disk_hits;
            im.memory[key] = gb;
            return gb;
        }
    }

    auto gb = std::make_shared<GroebnerBasis>(buchberger(ring, gens, ord));
    {
        std::lock_guard<std::mutex> lk(im.mu);
        ++im.stats.computed;
        im.memory[key] = gb;
    }
    if (use_cache && dir) save_to_file(path, key, *gb);
    return gb;
}

} // namespace locus
