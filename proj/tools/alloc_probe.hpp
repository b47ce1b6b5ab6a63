#pragma once

#include <cstddef>

#include "treedom/bench.hpp"

// Linking alloc_probe.cpp into an executable replaces the global allocation
// functions with counting wrappers around malloc/free.
namespace treedom::alloc_probe {

std::size_t live_bytes();
void reset_peak();
std::size_t peak_bytes_since_reset();

MemoryProbe make_memory_probe();

}  // namespace treedom::alloc_probe
