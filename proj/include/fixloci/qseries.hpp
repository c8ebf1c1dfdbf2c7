#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace fixloci {

/// Formal power series in q truncated at a fixed order, with coefficients in
/// a commutative ring R. R must default-construct to its zero and support
/// +, * and ==. All arithmetic is exact by contract; truncation is the only
/// lossy operation and is tracked by order().
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(check(order) + 1) {}

    TruncatedSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check(order) + 1);
    }

    static TruncatedSeries one(int order, R unit) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(unit);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// c_i for 0 <= i <= order; ring zero for i < 0. Indices beyond the
    /// truncation order are unknown, not zero, and throw.
    R coefficient(long long i) const {
        if (i < 0) return R{};
        if (i > order())
            throw std::out_of_range("coefficient index beyond truncation order");
        return coeffs_[static_cast<size_t>(i)];
    }

    R& at(int i) { return coeffs_.at(static_cast<size_t>(i)); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static int check(int order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return order;
    }
    std::vector<R> coeffs_;
};

template <typename R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries<R> out(n);
    for (int i = 0; i <= n; ++i) out.at(i) = a.coefficient(i) + b.coefficient(i);
    return out;
}

template <typename R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries<R> out(n);
    for (int i = 0; i <= n; ++i) {
        const R& ai = a.coefficient(i);
        if (ai == R{}) continue;
        for (int j = 0; i + j <= n; ++j) out.at(i + j) = out.at(i + j) + ai * b.coefficient(j);
    }
    return out;
}

/// Product of a list of factors; the empty product is 1. The result is
/// truncated at min(order, all factor orders) and is independent of the
/// association order.
template <typename R>
TruncatedSeries<R> series_product(std::span<const TruncatedSeries<R>> factors,
                                  int order, R unit) {
    TruncatedSeries<R> acc = TruncatedSeries<R>::one(order, std::move(unit));
    for (const auto& f : factors) acc = series_mul(acc, f);
    return acc;
}

} // namespace fixloci
