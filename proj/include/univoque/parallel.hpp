#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace univoque {

/// Runs fn(i) for i in [0, n) and collects the results in index order.
/// With parallel=true the index range is split into chunks evaluated on
/// std::async workers; fn must be pure. The merge is deterministic.
template <class T, class Fn>
std::vector<T> indexed_map(size_t n, Fn&& fn, bool parallel) {
    std::vector<T> out(n);
    if (!parallel || n < 64) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    size_t workers = std::max<size_t>(1, std::thread::hardware_concurrency());
    size_t chunk = (n + workers - 1) / workers;
    std::vector<std::future<void>> futs;
    for (size_t w = 0; w < workers; ++w) {
        size_t begin = w * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        futs.push_back(std::async(std::launch::async, [&out, &fn, begin, end] {
            for (size_t i = begin; i < end; ++i) out[i] = fn(i);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

} // namespace univoque
