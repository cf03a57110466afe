#ifndef PGNL_SIEVE_HPP
#define PGNL_SIEVE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgnl/numeric.hpp"
#include "pgnl/polygonal.hpp"

namespace pgnl {

// Bitset over [0, bound]: bit k set means k is representable (or is a value,
// depending on context). This is the hot data structure of every scan.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(Int bound);

    Int bound() const { return bound_; }
    bool test(Int k) const {
        return (words_[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1u;
    }
    void set(Int k) { words_[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // Least 1 <= k <= bound with bit k clear.
    std::optional<Int> first_zero() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    Int bound_ = -1;
    std::vector<std::uint64_t> words_;
};

enum class Kernel { Serial, Parallel, Auto };

// out = union over s in shifts of (in << s), truncated to the bound.
// Requires out.bound() == in.bound(); shifts sorted or not, each >= 0.
// The serial kernel is the reference implementation; the parallel kernel
// partitions output words across OpenMP threads and must produce identical
// bits.
void or_shifted_serial(const Bitset& in, std::span<const Int> shifts, Bitset& out);
void or_shifted_parallel(const Bitset& in, std::span<const Int> shifts, Bitset& out);
void or_shifted(const Bitset& in, std::span<const Int> shifts, Bitset& out,
                Kernel kernel = Kernel::Auto);

// Bitset of { P_m(x) } over [0, bound].
Bitset value_bitset(Int m, Int bound);

// Representability bitset of F over [0, bound], built by combining value
// sets term by term (bit 0 starts set: the empty sum).
Bitset representability(const PolygonalSum& F, Int bound, Kernel kernel = Kernel::Auto);

// One combine step: representability of F + a*P_m given the bitset of F.
Bitset extend_representability(const Bitset& base, Int a, Int m,
                               Kernel kernel = Kernel::Auto);

// Shift list a * values_up_to(m, bound/a) used by the combine kernels.
std::vector<Int> term_shifts(Int a, Int m, Int bound);

} // namespace pgnl

#endif
