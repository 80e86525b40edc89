#include "polyjac/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace polyjac {

namespace {

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_ia32_pause();
#else
    std::this_thread::yield();
#endif
}

// spin briefly before sleeping; back-to-back stage launches stay on the
// fast path while idle pools park on the condition variable. Long spins
// backfire when cores are oversubscribed: a spinning sibling steals cycles
// from the thread doing real work.
constexpr int kSpinRounds = 1 << 10;

}  // namespace

int resolve_workers(int requested) {
    if (requested < 0) throw std::invalid_argument("workers must be >= 0");
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

VirtualGrid::VirtualGrid(int workers) : nworkers_(resolve_workers(workers)) {
    threads_.reserve(nworkers_ - 1);
    for (int w = 1; w < nworkers_; ++w) {
        threads_.emplace_back([this, w] { worker_loop(w); });
    }
}

VirtualGrid::~VirtualGrid() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        stop_ = true;
    }
    cv_.notify_all();
    for (std::thread& t : threads_) t.join();
}

void VirtualGrid::run_blocks(int worker) {
    // pull runs of consecutive blocks: neighbouring blocks tend to write
    // neighbouring output lines, so fine-grained interleaving across
    // workers would bounce those lines between cores
    const int grain = std::max(1, nblocks_ / (nworkers_ * 4));
    for (;;) {
        const int first = next_block_.fetch_add(grain, std::memory_order_relaxed);
        if (first >= nblocks_) break;
        const int last = std::min(first + grain, nblocks_);
        for (int b = first; b < last; ++b) {
            if (failed_.load(std::memory_order_relaxed)) continue;  // drain after an error
            const int lo = b * block_size_;
            const int hi = std::min(lo + block_size_, total_);     // pad ids skipped
            try {
                for (int t = lo; t < hi; ++t) (*fn_)(t, worker);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu_);
                if (!error_) error_ = std::current_exception();
                failed_.store(true, std::memory_order_relaxed);
            }
        }
    }
}

void VirtualGrid::worker_loop(int worker) {
    std::uint64_t seen = 0;
    for (;;) {
        bool woke = false;
        for (int i = 0; i < kSpinRounds; ++i) {
            if (epoch_.load(std::memory_order_acquire) != seen) {
                woke = true;
                break;
            }
            cpu_relax();
        }
        if (!woke) {
            std::unique_lock<std::mutex> lock(mu_);
            cv_.wait(lock, [&] { return stop_ || epoch_.load(std::memory_order_acquire) != seen; });
        }
        if (epoch_.load(std::memory_order_acquire) == seen) {
            std::lock_guard<std::mutex> lock(mu_);
            if (stop_) return;
            continue;
        }
        seen = epoch_.load(std::memory_order_acquire);
        run_blocks(worker);
        if (running_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
            std::lock_guard<std::mutex> lock(done_mu_);
            done_cv_.notify_all();
        }
    }
}

void VirtualGrid::launch(int total, int block_size, const std::function<void(int, int)>& fn) {
    if (total < 0) throw std::invalid_argument("launch: negative thread count");
    if (block_size < 1) throw std::invalid_argument("launch: block size must be >= 1");
    if (total == 0) return;

    fn_ = &fn;
    total_ = total;
    block_size_ = block_size;
    nblocks_ = (total + block_size - 1) / block_size;
    next_block_.store(0, std::memory_order_relaxed);
    {
        std::lock_guard<std::mutex> lock(err_mu_);
        error_ = nullptr;
    }
    failed_.store(false, std::memory_order_relaxed);

    if (nworkers_ == 1) {
        run_blocks(0);
    } else {
        running_.store(nworkers_, std::memory_order_relaxed);
        {
            std::lock_guard<std::mutex> lock(mu_);
            epoch_.fetch_add(1, std::memory_order_release);
        }
        cv_.notify_all();

        run_blocks(0);
        if (running_.fetch_sub(1, std::memory_order_acq_rel) != 1) {
            bool done = false;
            for (int i = 0; i < kSpinRounds; ++i) {
                if (running_.load(std::memory_order_acquire) == 0) {
                    done = true;
                    break;
                }
                cpu_relax();
            }
            if (!done) {
                std::unique_lock<std::mutex> lock(done_mu_);
                done_cv_.wait(lock, [&] { return running_.load(std::memory_order_acquire) == 0; });
            }
        }
    }

    fn_ = nullptr;
    if (failed_.load(std::memory_order_acquire)) {
        std::lock_guard<std::mutex> lock(err_mu_);
        std::rethrow_exception(error_);
    }
}

void run_grid(const std::function<void(int)>& kernel, int total, int block_size, int workers) {
    VirtualGrid grid(workers);
    grid.launch(total, block_size, [&kernel](int t, int) { kernel(t); });
}

namespace {

GridConfig checked(GridConfig grid) {
    if (grid.block_size < 1) throw std::invalid_argument("block size must be >= 1");
    grid.workers = resolve_workers(grid.workers);
    return grid;
}

}  // namespace

EvaluationContext::EvaluationContext(const PolynomialSystem& sys, GridConfig grid)
    : layout_(build_layout(sys)),
      grid_(checked(grid)),
      pool_(grid_.workers),
      mons_(make_mons_buffer(sys)) {
    const int n = layout_.n;
    factors_.resize(layout_.monomial_count());
    sums_.resize(static_cast<std::size_t>(n) * n + n);
    workers_.resize(grid_.workers);
    for (WorkerState& w : workers_) w.ws.resize(layout_.k);
    point_.resize(n);
}

void EvaluationContext::evaluate_into(const EvaluationPoint& point, EvaluationResult& out) {
    const int n = layout_.n;
    if (static_cast<int>(point.size()) != n) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    for (const Complex& c : point) {
        if (!finite(c)) throw std::invalid_argument("evaluate: non-finite coordinate");
    }
    std::copy(point.begin(), point.end(), point_.begin());

    // shared power table, one chain per variable (counted as stage 1)
    stage1_powers(powers_, point_, layout_.d, mults_);

    const int nm = static_cast<int>(layout_.monomial_count());
    const int B = grid_.block_size;

    pool_.launch(nm, B, [this](int t, int w) {
        factors_[t] = stage1_common_factor(layout_, t, powers_, workers_[w].mults);
    });

    pool_.launch(nm, B, [this](int t, int w) {
        stage2_term(t, layout_, point_, factors_[t], workers_[w].ws, mons_, workers_[w].mults);
    });

    pool_.launch(static_cast<int>(sums_.size()), B, [this](int t, int w) {
        (void)w;
        sums_[t] = stage3_sum(t, mons_, layout_.n, layout_.m);
    });

    for (WorkerState& w : workers_) {
        mults_ += w.mults;
        w.mults = MultCounter{};
    }

    out.n = n;
    out.values.assign(sums_.begin(), sums_.begin() + n);
    out.jacobian.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < n; ++p) {
            out.jacobian[static_cast<std::size_t>(p) * n + i] =
                sums_[static_cast<std::size_t>(i + 1) * n + p];
        }
    }
}

EvaluationResult EvaluationContext::evaluate(const EvaluationPoint& point) {
    EvaluationResult result;
    evaluate_into(point, result);
    return result;
}

BatchResult EvaluationContext::evaluate_batch(const std::vector<EvaluationPoint>& points,
                                              int repeat) {
    if (repeat < 1) throw std::invalid_argument("evaluate_batch: repeat must be >= 1");

    BatchResult batch;
    batch.results.resize(points.size());

    const MultCounter before = mults_;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (int r = 0; r < repeat; ++r) {
            evaluate_into(points[i], batch.results[i]);
        }
    }
    const auto t1 = std::chrono::steady_clock::now();

    batch.report.evals = static_cast<int>(points.size()) * repeat;
    batch.report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    batch.report.per_eval_seconds =
        batch.report.evals > 0 ? batch.report.wall_seconds / batch.report.evals : 0.0;
    batch.report.mults = MultCounter{
        mults_.stage1_powers - before.stage1_powers,
        mults_.stage1_factors - before.stage1_factors,
        mults_.stage2 - before.stage2,
        mults_.speelpenning - before.speelpenning,
        mults_.stage3 - before.stage3,
    };
    return batch;
}

bool EvaluationContext::masked_slots_clean() const {
    for (std::size_t i = 0; i < mons_.slots.size(); ++i) {
        if (mons_.zero_mask[i] && !bit_equal(mons_.slots[i], Complex{0.0, 0.0})) {
            return false;
        }
    }
    return true;
}

}  // namespace polyjac
