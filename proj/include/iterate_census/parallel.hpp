#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace iterate_census::detail {

/// Splits [0, count) into `workers` contiguous chunks and runs body(chunk, begin, end)
/// for each, in parallel when workers > 1. Chunk boundaries depend only on
/// (count, workers), so per-chunk results can be reduced in a fixed order.
template <class Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1U, workers);
    const std::size_t chunks = std::min<std::size_t>(workers, std::max<std::size_t>(count, 1));
    auto bounds = [&](std::size_t c) { return count * c / chunks; };
    if (chunks == 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> threads;
        threads.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            threads.emplace_back([&, c] {
                try {
                    body(c, bounds(c), bounds(c + 1));
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace iterate_census::detail
