#pragma once

#include <algorithm>
#include <cmath>

#include "types.hpp"

namespace abcalc {

// Running sum with the consecutive-small-terms stopping rule.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(const SeriesControl& ctl, Complex init = {}) : ctl_(ctl), sum_(init) {
        max_term_ = std::abs(init);
    }

    /// Adds a term; returns true once the stopping rule is met.
    bool add(Complex term) {
        sum_ += term;
        ++terms_;
        const double mag = std::abs(term);
        max_term_ = std::max(max_term_, mag);
        last_ = mag;
        if (mag == 0.0 || mag <= ctl_.rel_tol * std::abs(sum_)) {
            ++small_;
        } else {
            small_ = 0;
        }
        if (small_ >= ctl_.consecutive_small) done_ = true;
        return done_;
    }

    void mark_terminated() { done_ = true; }

    bool done() const { return done_; }
    bool exhausted() const { return terms_ >= ctl_.max_terms; }
    Complex sum() const { return sum_; }
    int terms() const { return terms_; }
    double max_term() const { return max_term_; }
    double last_term() const { return last_; }

private:
    SeriesControl ctl_;
    Complex sum_;
    int terms_ = 0;
    int small_ = 0;
    double max_term_ = 0.0;
    double last_ = 0.0;
    bool done_ = false;
};

}  // namespace abcalc
