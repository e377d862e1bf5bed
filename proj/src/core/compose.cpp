#include "compose.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace abcalc {
namespace {

struct Key {
    std::uint64_t re = 0;
    std::uint64_t im = 0;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.re * 0x9E3779B97F4A7C15ULL ^ k.im);
    }
};

struct Cache {
    std::mutex mutex;
    std::unordered_map<Key, Complex, KeyHash> values;
};

}  // namespace

Function memoized_image(std::function<Complex(Complex)> op, std::string label) {
    auto cache = std::make_shared<Cache>();
    auto fn = [op = std::move(op), cache](Complex zeta) -> Complex {
        const Key key{std::bit_cast<std::uint64_t>(zeta.real()), std::bit_cast<std::uint64_t>(zeta.imag())};
        {
            std::lock_guard lock(cache->mutex);
            if (auto it = cache->values.find(key); it != cache->values.end()) return it->second;
        }
        const Complex v = op(zeta);
        std::lock_guard lock(cache->mutex);
        cache->values.emplace(key, v);
        return v;
    };
    return Function::from_callable(std::move(fn), std::move(label));
}

}  // namespace abcalc
