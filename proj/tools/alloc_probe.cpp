#include "alloc_probe.hpp"

#include <malloc.h>

#include <atomic>
#include <cstdlib>
#include <new>

namespace treedom::alloc_probe {
namespace {

std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};
std::atomic<std::size_t> g_base{0};

void* track(void* p) {
  if (p == nullptr) return nullptr;
  const std::size_t live = g_live.fetch_add(malloc_usable_size(p)) + malloc_usable_size(p);
  std::size_t peak = g_peak.load(std::memory_order_relaxed);
  while (live > peak && !g_peak.compare_exchange_weak(peak, live)) {
  }
  return p;
}

void untrack(void* p) {
  if (p == nullptr) return;
  g_live.fetch_sub(malloc_usable_size(p));
  std::free(p);
}

void* allocate(std::size_t size) {
  if (void* p = track(std::malloc(size == 0 ? 1 : size))) return p;
  throw std::bad_alloc();
}

void* allocate_aligned(std::size_t size, std::align_val_t align) {
  const auto a = static_cast<std::size_t>(align);
  const std::size_t rounded = (size + a - 1) / a * a;
  if (void* p = track(std::aligned_alloc(a, rounded == 0 ? a : rounded))) return p;
  throw std::bad_alloc();
}

}  // namespace

std::size_t live_bytes() { return g_live.load(); }

void reset_peak() {
  g_base = g_live.load();
  g_peak = g_base.load();
}

std::size_t peak_bytes_since_reset() { return g_peak.load() - g_base.load(); }

MemoryProbe make_memory_probe() {
  return MemoryProbe{[] { reset_peak(); }, [] { return peak_bytes_since_reset(); }};
}

}  // namespace treedom::alloc_probe

using treedom::alloc_probe::allocate;
using treedom::alloc_probe::allocate_aligned;
using treedom::alloc_probe::untrack;

void* operator new(std::size_t size) { return allocate(size); }
void* operator new[](std::size_t size) { return allocate(size); }
void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
  try {
    return allocate(size);
  } catch (...) {
    return nullptr;
  }
}
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
  try {
    return allocate(size);
  } catch (...) {
    return nullptr;
  }
}
void* operator new(std::size_t size, std::align_val_t align) {
  return allocate_aligned(size, align);
}
void* operator new[](std::size_t size, std::align_val_t align) {
  return allocate_aligned(size, align);
}

void operator delete(void* p) noexcept { untrack(p); }
void operator delete[](void* p) noexcept { untrack(p); }
void operator delete(void* p, std::size_t) noexcept { untrack(p); }
void operator delete[](void* p, std::size_t) noexcept { untrack(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { untrack(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { untrack(p); }
void operator delete(void* p, std::align_val_t) noexcept { untrack(p); }
void operator delete[](void* p, std::align_val_t) noexcept { untrack(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { untrack(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { untrack(p); }
