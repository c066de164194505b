#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hardy {

// A weight (or trial function) misses the integrability needed by the
// requested operation.  Carries the critical exponent so callers can report
// "needs p < p_c" style messages without re-deriving it.
class not_integrable_error : public std::domain_error {
public:
    not_integrable_error(const std::string& what, double critical_exponent)
        : std::domain_error(what), critical_(critical_exponent) {}

    double critical_exponent() const noexcept { return critical_; }

private:
    double critical_;
};

// Pointwise evaluation requested at a point where the weight is singular
// (e.g. a polar-power weight at theta = 0).
class singular_evaluation_error : public std::domain_error {
public:
    singular_evaluation_error(const std::string& what, double theta)
        : std::domain_error(what), theta_(theta) {}

    double theta() const noexcept { return theta_; }

private:
    double theta_;
};

// An integrand sample came back non-finite.  node_index points at the
// offending quadrature node so the caller can inspect rule + integrand.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, std::size_t node_index, double theta)
        : std::runtime_error(what), node_(node_index), theta_(theta) {}

    std::size_t node_index() const noexcept { return node_; }
    double theta() const noexcept { return theta_; }

private:
    std::size_t node_;
    double theta_;
};

// An iterative procedure ran out of iterations.  Carries the best iterate's
// objective value and first-order residual so the failure is diagnosable.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_value, double residual,
                      int iterations)
        : std::runtime_error(what), best_(best_value), residual_(residual),
          iterations_(iterations) {}

    double best_value() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double best_;
    double residual_;
    int iterations_;
};

// A curve/table was queried outside its sampled range.  The message says how
// to extend the range; min/max give the valid window.
class extrapolation_error : public std::domain_error {
public:
    extrapolation_error(const std::string& what, double requested, double lo, double hi)
        : std::domain_error(what), requested_(requested), lo_(lo), hi_(hi) {}

    double requested() const noexcept { return requested_; }
    double range_min() const noexcept { return lo_; }
    double range_max() const noexcept { return hi_; }

private:
    double requested_;
    double lo_;
    double hi_;
};

} // namespace hardy
