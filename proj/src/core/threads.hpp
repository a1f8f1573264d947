#pragma once

#include <cstddef>
#include <functional>

namespace sphaera {

// Global worker cap for the Monte Carlo loops and the transforms.
// Results never depend on it: every parallel_for body writes only to
// slots owned by its index and reductions happen afterwards in index order.
void set_max_threads(int n);
int max_threads();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}
