#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "polyjac/kernels.hpp"

namespace polyjac {

struct GridConfig {
    int block_size = 32;
    int workers = 0;  // 0 = all hardware threads
};

int resolve_workers(int requested);

// Persistent pool executing virtual thread grids: ids [0, total) are cut
// into blocks of block_size (the last block padded, pad ids skipped) and
// workers pull whole blocks from a shared counter. launch() returns once
// every id has run; the first kernel exception is rethrown there.
//
// fn receives (thread_id, worker) where worker < workers() identifies the
// executing pool member; numeric results must not depend on it.
class VirtualGrid {
public:
    explicit VirtualGrid(int workers);
    ~VirtualGrid();

    VirtualGrid(const VirtualGrid&) = delete;
    VirtualGrid& operator=(const VirtualGrid&) = delete;

    int workers() const { return nworkers_; }

    void launch(int total, int block_size, const std::function<void(int, int)>& fn);

private:
    void worker_loop(int worker);
    void run_blocks(int worker);

    int nworkers_ = 1;
    std::vector<std::thread> threads_;

    std::mutex mu_;
    std::condition_variable cv_;
    std::atomic<std::uint64_t> epoch_{0};
    bool stop_ = false;

    const std::function<void(int, int)>* fn_ = nullptr;
    int total_ = 0;
    int block_size_ = 1;
    int nblocks_ = 0;
    std::atomic<int> next_block_{0};
    std::atomic<int> running_{0};
    std::mutex done_mu_;
    std::condition_variable done_cv_;

    std::mutex err_mu_;
    std::exception_ptr error_;
    std::atomic<bool> failed_{false};
};

// One-shot grid run on a transient pool; kernel(thread_id) for every id in
// [0, total) exactly once, completion is a barrier.
void run_grid(const std::function<void(int)>& kernel, int total, int block_size, int workers);

struct BatchReport {
    int evals = 0;
    double wall_seconds = 0.0;
    double per_eval_seconds = 0.0;
    MultCounter mults;
};

struct BatchResult {
    std::vector<EvaluationResult> results;  // one per input point
    BatchReport report;
};

// Owns the packed layout and every reusable buffer of one evaluation
// stream. Not safe for concurrent evaluate calls on one context; use one
// context per thread instead.
class EvaluationContext {
public:
    explicit EvaluationContext(const PolynomialSystem& sys, GridConfig grid = {});

    // Three grid launches with barriers between: n*m common-factor threads,
    // n*m term threads, n^2+n sum threads. Bit-identical output for fixed
    // (system, point, block size) whatever the worker count.
    EvaluationResult evaluate(const EvaluationPoint& point);

    // Each point evaluated repeat times back to back; wall time covers the
    // evaluation loop only.
    BatchResult evaluate_batch(const std::vector<EvaluationPoint>& points, int repeat);

    const PackedLayout& layout() const { return layout_; }
    const GridConfig& grid() const { return grid_; }

    // multiplications tallied since construction
    const MultCounter& mults() const { return mults_; }

    // true while every masked slot still holds an exact +0 pair
    bool masked_slots_clean() const;

private:
    // per-worker mutable state, line-aligned against false sharing
    struct alignas(64) WorkerState {
        ThreadWorkspace ws;
        MultCounter mults;
    };

    void evaluate_into(const EvaluationPoint& point, EvaluationResult& out);

    PackedLayout layout_;
    GridConfig grid_;
    VirtualGrid pool_;
    PowersTable powers_;
    FactorBuffer factors_;
    MonsBuffer mons_;
    std::vector<Complex> sums_;        // n^2+n stage-3 outputs
    std::vector<WorkerState> workers_;  // one per worker
    MultCounter mults_;
    EvaluationPoint point_;
};

}  // namespace polyjac
