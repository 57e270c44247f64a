#include "locsep/gf2.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace locsep::gf2 {

void xor_into_scalar(Word* dst, const Word* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool avx2_available() {
#if defined(LOCSEP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

using XorFn = void (*)(Word*, const Word*, std::size_t);

Kernel initial_kernel() {
    // LOCSEP_SIMD=scalar pins the reference path (useful when bisecting a kernel mismatch).
    const char* env = std::getenv("LOCSEP_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Kernel::scalar;
    return avx2_available() ? Kernel::avx2 : Kernel::scalar;
}

XorFn fn_for(Kernel k) {
#if defined(LOCSEP_HAVE_AVX2)
    if (k == Kernel::avx2) return &xor_into_avx2;
#endif
    (void)k;
    return &xor_into_scalar;
}

std::atomic<Kernel>& current() {
    static std::atomic<Kernel> k{initial_kernel()};
    return k;
}

}  // namespace

Kernel active_kernel() { return current().load(std::memory_order_relaxed); }

void select_kernel(Kernel k) {
    if (k == Kernel::avx2 && !avx2_available()) k = Kernel::scalar;
    current().store(k, std::memory_order_relaxed);
}

const char* kernel_name(Kernel k) { return k == Kernel::avx2 ? "avx2" : "scalar"; }

void xor_into(Word* dst, const Word* src, std::size_t words) { fn_for(active_kernel())(dst, src, words); }

bool BitVector::none() const {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

long BitVector::lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return static_cast<long>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    xor_into(words_.data(), o.words_.data(), words_.size());
    return *this;
}

void Basis::reduce(BitVector& v) const {
    // Rows are fully reduced: a pivot bit is set in its own row only, so one pass clears all pivots.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.test(static_cast<std::size_t>(pivots_[i]))) v ^= rows_[i];
}

bool Basis::insert(BitVector v) {
    reduce(v);
    const long p = v.lowest();
    if (p < 0) return false;
    for (auto& row : rows_)
        if (row.test(static_cast<std::size_t>(p))) row ^= v;
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
}

bool Basis::spans(BitVector v) const {
    reduce(v);
    return v.none();
}

std::size_t rank(const std::vector<BitVector>& rows) {
    if (rows.empty()) return 0;
    Basis b(rows.front().bits());
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

}  // namespace locsep::gf2
