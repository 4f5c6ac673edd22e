#include "udbound/bigint.hpp"

#include <algorithm>

#include "udbound/errors.hpp"

namespace udbound {

int BigInt::signum() const {
    if (big()) return sign_;
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

long long BigInt::to_int64() const {
    if (!big()) return small_;
    throw InternalError("BigInt::to_int64: value exceeds int64 range: " + to_decimal());
}

std::vector<std::uint32_t> BigInt::mag_of(unsigned long long v) {
    std::vector<std::uint32_t> m;
    while (v != 0) {
        m.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    return m;
}

void BigInt::promote() {
    if (big()) return;
    if (small_ == 0) {
        sign_ = 1;  // canonical zero never reaches big mode; placeholder sign
        mag_ = {0};
        mag_.clear();
        mag_.push_back(0);
        return;
    }
    sign_ = small_ > 0 ? 1 : -1;
    unsigned long long a = small_ > 0 ? static_cast<unsigned long long>(small_)
                                      : ~static_cast<unsigned long long>(small_) + 1ull;
    mag_ = mag_of(a);
    small_ = 0;
}

void BigInt::normalize() {
    if (!big()) return;
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) {
        small_ = 0;
        sign_ = 0;
        return;
    }
    if (mag_.size() <= 2) {
        unsigned long long v = mag_[0];
        if (mag_.size() == 2) v |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ > 0 && v <= 0x7fffffffffffffffull) {
            small_ = static_cast<long long>(v);
            mag_.clear();
            return;
        }
        if (sign_ < 0 && v <= 0x8000000000000000ull) {
            small_ = static_cast<long long>(~v + 1ull);
            mag_.clear();
            return;
        }
    }
}

int BigInt::mag_compare(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::mag_add(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r;
    r.reserve(hi.size() + 1);
    unsigned long long carry = 0;
    for (std::size_t k = 0; k < hi.size(); ++k) {
        unsigned long long s = carry + hi[k] + (k < lo.size() ? lo[k] : 0u);
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::mag_sub(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    long long borrow = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        long long d = static_cast<long long>(a[k]) - borrow - (k < b.size() ? b[k] : 0u);
        borrow = 0;
        if (d < 0) {
            d += 0x100000000ll;
            borrow = 1;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mag_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = r[i + j] + carry +
                                     static_cast<unsigned long long>(a[i]) * b[j];
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::add_signed(int osign, const std::vector<std::uint32_t>& omag) {
    promote();
    if (mag_.empty() || (mag_.size() == 1 && mag_[0] == 0)) {
        sign_ = osign;
        mag_ = omag;
        normalize();
        return;
    }
    if (omag.empty()) {
        normalize();
        return;
    }
    if (sign_ == osign) {
        mag_ = mag_add(mag_, omag);
    } else {
        int c = mag_compare(mag_, omag);
        if (c == 0) {
            mag_.clear();
            sign_ = 0;
        } else if (c > 0) {
            mag_ = mag_sub(mag_, omag);
        } else {
            mag_ = mag_sub(omag, mag_);
            sign_ = osign;
        }
    }
    normalize();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.big()) {
        if (r.small_ != (-0x7fffffffffffffffll - 1)) {
            r.small_ = -r.small_;
            return r;
        }
        r.promote();
    }
    if (!r.mag_.empty()) r.sign_ = -r.sign_;
    r.normalize();
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (!big() && !o.big()) {
        long long s;
        if (!__builtin_add_overflow(small_, o.small_, &s)) {
            small_ = s;
            return *this;
        }
    }
    BigInt tmp = o;
    tmp.promote();
    add_signed(tmp.sign_, tmp.mag_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    if (!big() && !o.big()) {
        long long s;
        if (!__builtin_sub_overflow(small_, o.small_, &s)) {
            small_ = s;
            return *this;
        }
    }
    BigInt tmp = o;
    tmp.promote();
    add_signed(tmp.mag_.empty() ? 0 : -tmp.sign_, tmp.mag_);
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    if (!big() && !o.big()) {
        long long s;
        if (!__builtin_mul_overflow(small_, o.small_, &s)) {
            small_ = s;
            return *this;
        }
    }
    BigInt a = *this, b = o;
    a.promote();
    b.promote();
    int s = (a.mag_.empty() || b.mag_.empty()) ? 0 : a.sign_ * b.sign_;
    mag_ = mag_mul(a.mag_, b.mag_);
    sign_ = mag_.empty() ? 0 : s;
    small_ = 0;
    if (mag_.empty()) {
        small_ = 0;
        sign_ = 0;
    }
    normalize();
    return *this;
}

BigInt BigInt::div_exact(std::uint32_t d) const {
    if (d == 0) throw InternalError("BigInt::div_exact: division by zero");
    if (!big()) {
        if (small_ % static_cast<long long>(d) != 0)
            throw InternalError("BigInt::div_exact: nonzero remainder");
        BigInt r;
        r.small_ = small_ / static_cast<long long>(d);
        return r;
    }
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size(), 0);
    unsigned long long rem = 0;
    for (std::size_t k = mag_.size(); k-- > 0;) {
        unsigned long long cur = (rem << 32) | mag_[k];
        r.mag_[k] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) throw InternalError("BigInt::div_exact: nonzero remainder");
    r.small_ = 0;
    r.normalize();
    return r;
}

int BigInt::compare(const BigInt& o) const {
    if (!big() && !o.big()) return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
    BigInt a = *this, b = o;
    a.promote();
    b.promote();
    int sa = a.mag_.empty() || (a.mag_.size() == 1 && a.mag_[0] == 0) ? 0 : a.sign_;
    int sb = b.mag_.empty() || (b.mag_.size() == 1 && b.mag_[0] == 0) ? 0 : b.sign_;
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    int c = mag_compare(a.mag_, b.mag_);
    return sa > 0 ? c : -c;
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size()) throw ParseError("expected digits", pos);
    BigInt r;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch < '0' || ch > '9') throw ParseError("expected digit", pos);
        r *= BigInt(10);
        r += BigInt(ch - '0');
    }
    return neg ? -r : r;
}

std::string BigInt::to_decimal() const {
    if (!big()) return std::to_string(small_);
    std::vector<std::uint32_t> m = mag_;
    std::string out;
    while (!(m.empty() || (m.size() == 1 && m[0] == 0))) {
        unsigned long long rem = 0;
        for (std::size_t k = m.size(); k-- > 0;) {
            unsigned long long cur = (rem << 32) | m[k];
            m[k] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        std::string chunk = std::to_string(rem);
        if (!m.empty())
            chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    if (out.empty()) out = "0";
    return (sign_ < 0 ? "-" : "") + out;
}

}  // namespace udbound
