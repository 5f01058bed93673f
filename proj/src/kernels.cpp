#include "claw/kernels.hpp"

namespace claw::kernels {
namespace {

const Ops* select() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) return &avx2;
#endif
  return &scalar;
}

const Ops* const g_active = select();

}  // namespace

const Ops& active() { return *g_active; }

const char* dispatch_name() {
#if defined(__x86_64__)
  return (g_active == &avx2) ? "avx2" : "scalar";
#else
  return "scalar";
#endif
}

}  // namespace claw::kernels
