#ifndef FFSQ_PARALLEL_HPP
#define FFSQ_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ffsq {

/// Deterministic chunked map-reduce over the index range [0, count).
/// Each worker accumulates into its own copy of `init` via
/// body(state, index); partial states are merged in worker order with
/// state.merge(other). Because every merge we use is commutative and
/// associative (componentwise counter addition), the result is identical
/// for any worker count.
template <class State, class Body>
State parallel_reduce(uint64_t count, unsigned workers, State init, Body body) {
    if (workers < 1) workers = 1;
    if (workers == 1 || count < 2 * workers) {
        State s = init;
        for (uint64_t i = 0; i < count; ++i) body(s, i);
        return s;
    }
    std::vector<State> partial(workers, init);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    uint64_t chunk = count / workers, extra = count % workers;
    uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            try {
                for (uint64_t i = begin; i < end; ++i) body(partial[w], i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    State result = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w) result.merge(partial[w]);
    return result;
}

}  // namespace ffsq

#endif
