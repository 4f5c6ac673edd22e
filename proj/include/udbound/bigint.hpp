#ifndef UDBOUND_BIGINT_HPP
#define UDBOUND_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udbound {

// Signed arbitrary-precision integer.
//
// Values that fit in int64 stay in a fixed-width fast path; arithmetic
// promotes to a sign-magnitude limb vector (base 2^32) on checked
// overflow.  Only the operations the polynomial layer needs are
// provided: ring arithmetic, comparison, decimal I/O, and exact
// division by a small positive integer.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design

    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return big() ? false : small_ == 0; }
    bool is_one() const { return !big() && small_ == 1; }
    // -1, 0, +1
    int signum() const;

    bool fits_int64() const { return !big(); }
    long long to_int64() const;  // throws InternalError when too large

    std::string to_decimal() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Exact division by a small positive integer; throws InternalError
    // if the remainder is nonzero.
    BigInt div_exact(std::uint32_t d) const;

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    int compare(const BigInt& o) const;

private:
    bool big() const { return !mag_.empty(); }

    // invariant: mag_ empty  -> value == small_
    //            mag_ nonempty -> value == sign_ * sum mag_[k] 2^(32k),
    //            sign_ in {-1,+1}, mag_.back() != 0
    long long small_ = 0;
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void promote();
    void normalize();
    static std::vector<std::uint32_t> mag_of(unsigned long long v);
    static int mag_compare(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mag_add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // requires a >= b
    static std::vector<std::uint32_t> mag_sub(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mag_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    void add_signed(int osign, const std::vector<std::uint32_t>& omag);
};

}  // namespace udbound

#endif
