// Compiled with -mavx2; only reached after the runtime CPU check in gf2.cpp.
#include <immintrin.h>

#include "locsep/gf2.hpp"

namespace locsep::gf2 {

void xor_into_avx2(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

}  // namespace locsep::gf2
