#ifndef DIVPOLY_PARALLEL_HPP
#define DIVPOLY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace divpoly {

/// out[i] = fn(in[i]) on up to `jobs` threads. Output order follows input
/// order whatever the schedule; the first exception thrown is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& in, unsigned jobs, Fn fn) {
    using Out = decltype(fn(in.front()));
    std::vector<std::optional<Out>> slots(in.size());
    std::vector<std::exception_ptr> errors(in.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < in.size(); i = next++) {
            try {
                slots[i].emplace(fn(in[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(in.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<Out> out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace divpoly

#endif // DIVPOLY_PARALLEL_HPP
