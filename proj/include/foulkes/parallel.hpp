// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace foulkes {

/// FOULKES_THREADS if set to a positive integer, else the hardware concurrency.
int worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count) on worker_count() threads.
/// The first exception thrown by any chunk is rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace foulkes
