#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace locsep::gf2 {

using Word = std::uint64_t;

/// Row-XOR kernels. `scalar` is the reference; `avx2` must agree with it bit for bit.
enum class Kernel { scalar, avx2 };

void xor_into_scalar(Word* dst, const Word* src, std::size_t words);
#if defined(LOCSEP_HAVE_AVX2)
void xor_into_avx2(Word* dst, const Word* src, std::size_t words);
#endif

/// True when the AVX2 variant is compiled in and the CPU reports support.
bool avx2_available();
Kernel active_kernel();
/// Selects a kernel for the process. Falls back to scalar when `k` is unavailable.
void select_kernel(Kernel k);
const char* kernel_name(Kernel k);

/// dst ^= src over `words` 64-bit words, through the selected kernel.
void xor_into(Word* dst, const Word* src, std::size_t words);

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

    void set(std::size_t i) { words_[i / 64] |= Word{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= Word{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool none() const;
    /// Index of the lowest set bit, or -1.
    long lowest() const;
    std::size_t bits() const { return bits_; }
    Word* data() { return words_.data(); }
    const Word* data() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }
    BitVector& operator^=(const BitVector& o);
    bool operator==(const BitVector& o) const { return bits_ == o.bits_ && words_ == o.words_; }

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

/// Incremental reduced row-echelon basis over GF(2).
class Basis {
public:
    explicit Basis(std::size_t bits) : bits_(bits) {}

    /// Reduces `v` against the basis; returns true when it was independent and got added.
    bool insert(BitVector v);
    /// True when `v` lies in the span.
    bool spans(BitVector v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t bits() const { return bits_; }

private:
    void reduce(BitVector& v) const;

    std::size_t bits_;
    std::vector<BitVector> rows_;
    std::vector<long> pivots_;  // pivots_[i] is set in rows_[i] and clear in every other row
};

std::size_t rank(const std::vector<BitVector>& rows);

}  // namespace locsep::gf2
