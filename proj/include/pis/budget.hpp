#pragma once

#include <chrono>
#include <cstdint>

namespace pis {

// Wall-clock plus node-count caps for one search stage.
struct Budget {
    std::int64_t max_nodes = 10'000'000;
    std::int64_t max_ms = 60'000;
};

class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // one unit of work; false once the budget is gone
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return false;
        if ((nodes_ & 0x3FF) == 0 && elapsed_ms() > budget_.max_ms) return false;
        return true;
    }

    void consume(std::int64_t n) { nodes_ += n; }

    bool exhausted() const {
        return nodes_ > budget_.max_nodes || elapsed_ms() > budget_.max_ms;
    }

    std::int64_t nodes() const { return nodes_; }
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    Budget budget_;
    std::int64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

enum class SearchOutcome {
    Found,
    NotFound,        // search space exhausted, no witness exists
    BudgetExhausted, // gave up; absence not proven
};

} // namespace pis
