#include "stencilnet/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stencilnet::kernels {

namespace {

const KernelTable* resolve(const std::string& name) {
    if (name == "scalar") return &scalar_table;
    if (name == "avx2") {
        if (!avx2_supported()) throw std::runtime_error("avx2 kernels requested but unsupported");
        return &avx2_table;
    }
    if (name == "auto") return avx2_supported() ? &avx2_table : &scalar_table;
    throw std::invalid_argument("unknown kernel backend: " + name);
}

const KernelTable* initial() {
    if (const char* env = std::getenv("STENCILNET_KERNEL")) return resolve(env);
    return resolve("auto");
}

const KernelTable*& current() {
    static const KernelTable* table = initial();
    return table;
}

}  // namespace

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable& active() {
    return *current();
}

void force_backend(const std::string& name) {
    current() = resolve(name);
}

std::string backend_name() {
    return active().name;
}

}  // namespace stencilnet::kernels
