#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace qalg {

// Operational failure (bad input, contract violation at the I/O boundary).
// Internal inconsistencies throw std::logic_error instead.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

// The field of rationals. Elements are GMP rationals kept in lowest terms
// with positive denominator, so rendering is canonical ("a" or "a/b").
class Rationals {
public:
    using Elem = mpq_class;
    static constexpr bool finite = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw error("division by zero in Q");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const { return a.get_str(); }

    Elem parse(const std::string& s) const {
        if (s.empty()) throw error("empty rational literal");
        for (size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
            if (!ok) throw error("malformed rational literal '" + s + "'");
        }
        if (s.find('/') != std::string::npos && s.find('/') == s.size() - 1)
            throw error("malformed rational literal '" + s + "'");
        Elem q;
        if (q.set_str(s, 10) != 0) throw error("malformed rational literal '" + s + "'");
        if (q.get_den() == 0) throw error("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    }

    std::string name() const { return "Q"; }
    bool operator==(const Rationals&) const { return true; }
};

// Prime field F_p with canonical representatives 0..p-1.
class PrimeField {
public:
    using Elem = std::int64_t;
    static constexpr bool finite = true;

    explicit PrimeField(std::int64_t p) : p_(p) {
        require(p >= 2, "field characteristic must be >= 2");
        for (std::int64_t d = 2; d * d <= p; ++d)
            require(p % d != 0, "F" + std::to_string(p) + ": " + std::to_string(p) + " is not prime");
    }

    std::int64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long n) const {
        Elem r = n % p_;
        return r < 0 ? r + p_ : r;
    }

    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<__int128>(a) * b % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw error("division by zero in F" + std::to_string(p_));
        // extended Euclid
        Elem t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            Elem q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string str(Elem a) const { return std::to_string(a); }

    Elem parse(const std::string& s) const {
        if (s.empty()) throw error("empty field literal");
        try {
            size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw error("malformed field literal '" + s + "'");
            return from_int(static_cast<long>(v));
        } catch (const std::invalid_argument&) {
            throw error("malformed field literal '" + s + "'");
        } catch (const std::out_of_range&) {
            throw error("field literal out of range '" + s + "'");
        }
    }

    std::string name() const { return "F" + std::to_string(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

// Runtime field descriptor, used by the I/O layer to pick a template instantiation.
struct FieldSpec {
    enum class Kind { rationals, prime } kind = Kind::rationals;
    std::int64_t p = 0;

    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return {Kind::rationals, 0};
        if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
            FieldSpec fs;
            fs.kind = Kind::prime;
            try {
                fs.p = std::stoll(s.substr(1));
            } catch (...) {
                throw error("bad field spec '" + s + "' (expected Q or F<p>)");
            }
            PrimeField check(fs.p);  // validates primality
            return fs;
        }
        throw error("bad field spec '" + s + "' (expected Q or F<p>)");
    }

    std::string name() const {
        return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
    }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

}  // namespace qalg
