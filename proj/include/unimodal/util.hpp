#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace unimodal {

inline constexpr const char* kToolVersion = "unimodal 1.0.0";

// FNV-1a 64-bit, used for table checksums.
struct Fnv1a64 {
    std::uint64_t h = 1469598103934665603ULL;
    void feed(const char* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ULL;
        }
    }
    void feed(const std::string& s) { feed(s.data(), s.size()); }
    std::string hex() const {
        static const char* d = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t v = h;
        for (int i = 15; i >= 0; --i) { out[i] = d[v & 0xf]; v >>= 4; }
        return out;
    }
};

// Chunked parallel loop with deterministic result placement: body(i) writes
// only to slot i of caller-owned storage, so the merge order is fixed by the
// index, never by thread scheduling.
inline void parallel_for(std::int64_t lo, std::int64_t hi,
                         const std::function<void(std::int64_t)>& body,
                         unsigned max_threads = 0) {
    if (hi <= lo) return;
    unsigned hw = max_threads ? max_threads : std::thread::hardware_concurrency();
    if (hw < 2 || hi - lo < 16) {
        for (std::int64_t i = lo; i < hi; ++i) body(i);
        return;
    }
    unsigned nthreads = hw;
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    std::int64_t total = hi - lo;
    std::int64_t chunk = (total + nthreads - 1) / nthreads;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < nthreads; ++t) {
        std::int64_t a = lo + static_cast<std::int64_t>(t) * chunk;
        std::int64_t b = std::min<std::int64_t>(a + chunk, hi);
        if (a >= b) break;
        workers.emplace_back([a, b, &body, &first_error, &error_mutex] {
            try {
                for (std::int64_t i = a; i < b; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace unimodal
