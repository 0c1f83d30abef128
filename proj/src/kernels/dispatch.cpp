#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ngsocx/errors.hpp"
#include "ngsocx/kernels.hpp"

namespace ngsocx::kernels {

#if defined(NGSOCX_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels()
{
#if defined(NGSOCX_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable* initial_choice()
{
    const char* env = std::getenv("NGSOCX_KERNEL");
    const std::string_view want = env ? env : "auto";
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2") {
        if (!avx2_kernels()) throw ConfigError("NGSOCX_KERNEL=avx2 but AVX2 kernels are unavailable");
        return avx2_kernels();
    }
    if (want != "auto") throw ConfigError("NGSOCX_KERNEL must be auto, scalar or avx2");
    return avx2_kernels() ? avx2_kernels() : &scalar_kernels();
}

std::atomic<const KernelTable*>& slot()
{
    static std::atomic<const KernelTable*> current{initial_choice()};
    return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void select(Isa isa)
{
    const KernelTable* table = nullptr;
    switch (isa) {
    case Isa::Scalar:
        table = &scalar_kernels();
        break;
    case Isa::Avx2:
        table = avx2_kernels();
        break;
    }
    if (!table) throw ConfigError("requested kernel variant is not supported on this CPU/build");
    slot().store(table, std::memory_order_release);
}

}  // namespace ngsocx::kernels
