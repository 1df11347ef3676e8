#include "confbvp/fracpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace confbvp {

FracPoly FracPoly::from_coeffs(const std::vector<double>& coeffs) {
    std::vector<FracTerm> t;
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) t.push_back({coeffs[k], static_cast<double>(k)});
    return FracPoly(std::move(t));
}

double FracPoly::eval(double t) const {
    double s = 0.0;
    for (const auto& term : terms_)
        s += term.coef * (term.power == 0.0 ? 1.0 : std::pow(t, term.power));
    return s;
}

double FracPoly::eval1() const {
    double s = 0.0;
    for (const auto& term : terms_) s += term.coef;
    return s;
}

FracPoly& FracPoly::operator+=(const FracPoly& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

FracPoly FracPoly::operator+(const FracPoly& other) const {
    FracPoly r = *this;
    r += other;
    return r;
}

FracPoly FracPoly::scaled(double c) const {
    std::vector<FracTerm> t = terms_;
    for (auto& term : t) term.coef *= c;
    return FracPoly(std::move(t));
}

FracPoly FracPoly::shifted(double q) const {
    std::vector<FracTerm> t = terms_;
    for (auto& term : t) term.power += q;
    return FracPoly(std::move(t));
}

FracPoly FracPoly::conf_diff(double a) const {
    std::vector<FracTerm> t;
    for (const auto& term : terms_)
        if (term.power != 0.0) t.push_back({term.coef * term.power, term.power - a});
    return FracPoly(std::move(t));
}

FracPoly FracPoly::derivative() const {
    std::vector<FracTerm> t;
    for (const auto& term : terms_)
        if (term.power != 0.0) t.push_back({term.coef * term.power, term.power - 1.0});
    return FracPoly(std::move(t));
}

FracPoly FracPoly::integrate0_weighted(double w) const {
    if (!(w > 0.0)) throw std::domain_error("FracPoly::integrate0_weighted: weight must be positive");
    std::vector<FracTerm> t;
    for (const auto& term : terms_) {
        if (term.power + w <= 0.0)
            throw std::domain_error("FracPoly::integrate0_weighted: divergent at 0");
        t.push_back({term.coef / (term.power + w), term.power + w});
    }
    return FracPoly(std::move(t));
}

ScalarFn FracPoly::as_fn() const {
    return [p = *this](double t) { return p.eval(t); };
}

void FracPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const FracTerm& a, const FracTerm& b) { return a.power < b.power; });
    std::vector<FracTerm> merged;
    for (const auto& term : terms_) {
        if (!merged.empty() && std::abs(merged.back().power - term.power) < 1e-12)
            merged.back().coef += term.coef;
        else
            merged.push_back(term);
    }
    std::erase_if(merged, [](const FracTerm& t) { return t.coef == 0.0; });
    terms_ = std::move(merged);
}

} // namespace confbvp
