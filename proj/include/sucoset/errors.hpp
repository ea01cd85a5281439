#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sucoset {

// Precondition violations: wrong shapes, out-of-range indices, malformed input.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A pivot fell below the relative threshold during LU factorization.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t column, double pivot, double threshold)
        : std::runtime_error(format(column, pivot, threshold)),
          column_(column), pivot_(pivot), threshold_(threshold) {}

    std::size_t column() const noexcept { return column_; }
    double pivot_magnitude() const noexcept { return pivot_; }
    double threshold() const noexcept { return threshold_; }

private:
    static std::string format(std::size_t column, double pivot, double threshold) {
        std::ostringstream os;
        os << "matrix is singular to tolerance: pivot " << pivot << " in column "
           << column << " is below " << threshold;
        return os.str();
    }

    std::size_t column_;
    double pivot_;
    double threshold_;
};

// The frame matrix cannot be inverted at a coordinate point (chart degeneracy).
class SingularFrameError : public std::runtime_error {
public:
    SingularFrameError(std::vector<double> point, double condition, const std::string& detail,
                       const std::vector<std::string>& labels = {})
        : std::runtime_error(format(point, condition, detail, labels)),
          point_(std::move(point)), condition_(condition) {}

    const std::vector<double>& point() const noexcept { return point_; }
    double condition_estimate() const noexcept { return condition_; }

private:
    static std::string format(const std::vector<double>& point, double condition,
                              const std::string& detail, const std::vector<std::string>& labels) {
        std::ostringstream os;
        os.precision(17);
        os << "singular frame at coordinates (";
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (i) os << ", ";
            if (labels.size() == point.size()) os << labels[i] << '=';
            os << point[i];
        }
        os << "); condition estimate " << condition;
        if (!detail.empty()) os << "; " << detail;
        return os.str();
    }

    std::vector<double> point_;
    double condition_;
};

// An internal consistency check failed (e.g. left and right Haar densities disagree).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sucoset
