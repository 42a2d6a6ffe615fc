#pragma once

#include "pentparity/kernels.hpp"

namespace pentparity::kernels {

// Shared tail handler for vectorised variants.
void xor_shifted_scalar(std::span<Word> dst, std::span<const Word> src, std::size_t shift);

const KernelSet* x86_clmul_unchecked();

}  // namespace pentparity::kernels
