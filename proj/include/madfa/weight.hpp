#pragma once

// Weight functions phi : N+ -> N driving every parking-function notion.
// The parametric family phi(m) = a*(m+t)^k + c covers m^k, 2m^k, 2m^k-1,
// 2(m+t)^k and 2(m+t)^k-t-1; an escape variant holds a tabulated map.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace madfa {

class WeightFunction {
  public:
    static WeightFunction power(std::int64_t a, int k, std::int64_t t, std::int64_t c) {
        if (a < 1) throw std::invalid_argument("WeightFunction: coefficient a must be >= 1");
        if (k < 1) throw std::invalid_argument("WeightFunction: exponent k must be >= 1");
        if (t < 0) throw std::invalid_argument("WeightFunction: shift t must be >= 0");
        WeightFunction w;
        w.a_ = a;
        w.k_ = k;
        w.t_ = t;
        w.c_ = c;
        if (w(1) < 0)  // a,k,t make the family non-decreasing; only c can break phi >= 0
            throw std::invalid_argument("WeightFunction: phi(1) is negative");
        return w;
    }

    // phi(1), phi(2), ... as an explicit table; must be non-decreasing and >= 0.
    static WeightFunction table(std::vector<std::int64_t> values) {
        if (values.empty()) throw std::invalid_argument("WeightFunction: empty table");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 0) throw std::invalid_argument("WeightFunction: negative table value");
            if (i > 0 && values[i] < values[i - 1])
                throw std::invalid_argument("WeightFunction: table not non-decreasing");
        }
        WeightFunction w;
        w.values_ = std::move(values);
        return w;
    }

    std::int64_t operator()(std::int64_t m) const {
        if (m < 1) throw std::out_of_range("WeightFunction: argument must be >= 1");
        if (!values_.empty()) {
            if (m > static_cast<std::int64_t>(values_.size()))
                throw std::out_of_range("WeightFunction: beyond tabulated range");
            return values_[static_cast<std::size_t>(m - 1)];
        }
        const std::int64_t base = m + t_;
        std::int64_t p = 1;
        for (int i = 0; i < k_; ++i) {
            if (p > std::numeric_limits<std::int64_t>::max() / base)
                throw std::overflow_error("WeightFunction: value exceeds 64 bits");
            p *= base;
        }
        if (p > (std::numeric_limits<std::int64_t>::max() - std::abs(c_)) / a_)
            throw std::overflow_error("WeightFunction: value exceeds 64 bits");
        return a_ * p + c_;
    }

    bool is_tabulated() const { return !values_.empty(); }
    std::int64_t coefficient() const { return a_; }
    int exponent() const { return k_; }
    std::int64_t shift() const { return t_; }
    std::int64_t constant() const { return c_; }

    // Display name, e.g. "m^2", "2(m+1)^3-2".
    std::string name() const {
        if (is_tabulated()) return "tabulated";
        std::string s;
        if (a_ != 1) s += std::to_string(a_);
        s += t_ == 0 ? "m" : "(m+" + std::to_string(t_) + ")";
        if (k_ != 1) s += "^" + std::to_string(k_);
        if (c_ > 0) s += "+" + std::to_string(c_);
        if (c_ < 0) s += std::to_string(c_);
        return s;
    }

    bool operator==(const WeightFunction&) const = default;

  private:
    WeightFunction() = default;
    std::int64_t a_ = 1;
    int k_ = 1;
    std::int64_t t_ = 0;
    std::int64_t c_ = 0;
    std::vector<std::int64_t> values_;
};

// The families the automaton side cares about.
inline WeightFunction phi_mk(int k) { return WeightFunction::power(1, k, 0, 0); }
inline WeightFunction phi_2mk(int k, std::int64_t t = 0) { return WeightFunction::power(2, k, t, 0); }
inline WeightFunction phi_2mk_minus1(int k) { return WeightFunction::power(2, k, 0, -1); }
// 2(m+t)^k - t - 1: simple parking functions of this family count the
// constrained extended automata with t+1 constraints.
inline WeightFunction phi_constrained(int k, std::int64_t t) {
    return WeightFunction::power(2, k, t, -t - 1);
}

}  // namespace madfa
