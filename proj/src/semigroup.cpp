#include "semihole/semigroup.hpp"

#include "semihole/errors.hpp"

#include <atomic>
#include <thread>

namespace semihole {

SemigroupContext make_context(const Mat& A, int threads) {
    if (A.rows == 0 || A.cols == 0) throw UsageError("generator matrix must be at least 1x1");
    for (std::size_t j = 0; j < A.cols; ++j)
        if (is_zero(A.col(j))) throw UsageError("generator matrix has a zero column");
    SemigroupContext ctx;
    ctx.A = A;
    ctx.lat = lattice_normalize(A);
    ctx.cone = cone_profile(A, ctx.lat);
    ctx.threads = threads < 1 ? 1 : threads;
    // grading_n = lift^T * grading, so degree_n(normalize(x)) == degree(x) on L.
    ctx.grading_n.assign(ctx.lat.r, Int(0));
    for (std::size_t k = 0; k < ctx.lat.r; ++k)
        for (std::size_t i = 0; i < ctx.lat.d; ++i) ctx.grading_n[k] += ctx.lat.lift(i, k) * ctx.cone.grading[i];
    return ctx;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace semihole
