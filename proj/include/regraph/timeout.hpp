// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>

namespace regraph {

// Wall-clock budget for cooperative cancellation. Long-running algorithms
// poll expired() at coarse granularity (per round, per anchor, per chunk).
class Deadline {
public:
    static Deadline never() { return Deadline{}; }

    static Deadline after(double seconds) {
        Deadline d;
        d.unlimited_ = false;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const {
        return !unlimited_ && std::chrono::steady_clock::now() >= at_;
    }

    bool unlimited() const { return unlimited_; }

private:
    std::chrono::steady_clock::time_point at_{};
    bool unlimited_ = true;
};

// Thrown by scoring/counting paths when a Deadline expires mid-computation;
// callers that enforce timeouts map it to a timed-out outcome.
struct TimedOut {};

}  // namespace regraph
