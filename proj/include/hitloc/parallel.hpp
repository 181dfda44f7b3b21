#pragma once

namespace hitloc {

/// Thread cap for the OpenMP kernels: HITLOC_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int configured_threads();

/// Applies configured_threads() to the OpenMP runtime.
void apply_thread_limit();

}  // namespace hitloc
