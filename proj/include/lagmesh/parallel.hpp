#pragma once

#include <functional>

namespace lagmesh {

// Worker cap for parallel sections.  Resolution order: value set through
// set_thread_cap, then the LAGMESH_THREADS environment variable, then the
// hardware concurrency.  0 means auto.  Results never depend on the cap:
// every parallel loop body writes only its own slot.
void set_thread_cap(long cap);
long thread_budget();

// Runs body(i) for i in [0, n) on up to thread_budget() workers with a
// deterministic static partition.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace lagmesh
