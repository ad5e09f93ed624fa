#include "pgnlab/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgnlab {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> knots,
                                 std::vector<Rational> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2) {
        throw std::invalid_argument("piecewise-linear function needs >= 2 knots");
    }
    if (knots_.size() != values_.size()) {
        throw std::invalid_argument("knot/value length mismatch");
    }
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (!(knots_[i] < knots_[i + 1])) {
            throw std::invalid_argument("knots must be strictly increasing");
        }
    }
}

bool PiecewiseLinear::contains(const Rational& q) const {
    return domain_min() <= q && q <= domain_max();
}

std::size_t PiecewiseLinear::segment_index(const Rational& q) const {
    if (!contains(q)) {
        throw std::domain_error("evaluation point outside domain");
    }
    // First knot strictly greater than q, minus one.
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), q);
    std::size_t i = static_cast<std::size_t>(it - knots_.begin());
    if (i == knots_.size()) {
        --i;  // q == domain_max
    }
    return i - 1;
}

Rational PiecewiseLinear::segment_slope(std::size_t i) const {
    return (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
}

Rational PiecewiseLinear::eval(const Rational& q) const {
    const std::size_t i = segment_index(q);
    if (q == knots_[i]) {
        return values_[i];
    }
    if (q == knots_[i + 1]) {
        return values_[i + 1];
    }
    return values_[i] + segment_slope(i) * (q - knots_[i]);
}

Rational PiecewiseLinear::slope(const Rational& q, Side side) const {
    if (!contains(q)) {
        throw std::domain_error("slope query outside domain");
    }
    if (side == Side::left) {
        if (q == domain_min()) {
            throw std::domain_error("left slope at the left endpoint");
        }
        const std::size_t i = segment_index(q);
        return q == knots_[i] ? segment_slope(i - 1) : segment_slope(i);
    }
    if (q == domain_max()) {
        throw std::domain_error("right slope at the right endpoint");
    }
    return segment_slope(segment_index(q));
}

PiecewiseLinear PiecewiseLinear::restricted(const Rational& lo,
                                            const Rational& hi) const {
    const Rational a = std::max(lo, domain_min());
    const Rational b = std::min(hi, domain_max());
    if (!(a < b)) {
        throw std::domain_error("restriction interval has empty interior");
    }
    std::vector<Rational> ks, vs;
    ks.push_back(a);
    vs.push_back(eval(a));
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i] > a && knots_[i] < b) {
            ks.push_back(knots_[i]);
            vs.push_back(values_[i]);
        }
    }
    ks.push_back(b);
    vs.push_back(eval(b));
    return PiecewiseLinear(std::move(ks), std::move(vs));
}

PiecewiseLinear PiecewiseLinear::normalized() const {
    std::vector<Rational> ks{knots_.front()};
    std::vector<Rational> vs{values_.front()};
    for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
        // Keep knot i iff the slopes on either side differ.
        const Rational left = (values_[i] - vs.back()) / (knots_[i] - ks.back());
        const Rational right = segment_slope(i);
        if (left != right) {
            ks.push_back(knots_[i]);
            vs.push_back(values_[i]);
        }
    }
    ks.push_back(knots_.back());
    vs.push_back(values_.back());
    return PiecewiseLinear(std::move(ks), std::move(vs));
}

bool PiecewiseLinear::same_function(const PiecewiseLinear& other) const {
    if (domain_min() != other.domain_min() || domain_max() != other.domain_max()) {
        return false;
    }
    std::vector<Rational> merged = knots_;
    merged.insert(merged.end(), other.knots_.begin(), other.knots_.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (const Rational& q : merged) {
        if (eval(q) != other.eval(q)) {
            return false;
        }
    }
    return true;
}

PiecewiseLinear PiecewiseLinear::constant(Rational lo, Rational hi,
                                          Rational value) {
    std::vector<Rational> ks{std::move(lo), std::move(hi)};
    std::vector<Rational> vs{value, value};
    return PiecewiseLinear(std::move(ks), std::move(vs));
}

PiecewiseLinear linear_combination(const std::vector<Rational>& coeffs,
                                   const std::vector<PiecewiseLinear>& fs) {
    if (coeffs.size() != fs.size() || fs.empty()) {
        throw std::invalid_argument("coefficient/function length mismatch");
    }
    Rational lo = fs.front().domain_min();
    Rational hi = fs.front().domain_max();
    for (const auto& f : fs) {
        lo = std::max(lo, f.domain_min());
        hi = std::min(hi, f.domain_max());
    }
    if (!(lo < hi)) {
        throw std::domain_error("domain intersection has empty interior");
    }
    std::vector<Rational> merged;
    for (const auto& f : fs) {
        for (const Rational& q : f.knots()) {
            if (q >= lo && q <= hi) {
                merged.push_back(q);
            }
        }
    }
    merged.push_back(lo);
    merged.push_back(hi);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::vector<Rational> vs;
    vs.reserve(merged.size());
    for (const Rational& q : merged) {
        Rational acc = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            acc += coeffs[i] * fs[i].eval(q);
        }
        vs.push_back(std::move(acc));
    }
    return PiecewiseLinear(std::move(merged), std::move(vs));
}

}  // namespace pgnlab
