#pragma once

#include <stdexcept>
#include <string>

namespace arw {

// Domain error conditions surfaced to callers. All are recoverable: they
// signal bad inputs or unusable state, never internal corruption.

class NotSumOfTwoSquares : public std::runtime_error {
public:
    explicit NotSumOfTwoSquares(long long n)
        : std::runtime_error("n = " + std::to_string(n) +
                             " is not a sum of two squares; the frequency set is empty") {}
};

class MomentOverflow : public std::runtime_error {
public:
    MomentOverflow() : std::runtime_error("moment sum exceeds 128-bit accumulation") {}
};

class ResolutionTooLow : public std::runtime_error {
public:
    ResolutionTooLow(int m, int required)
        : std::runtime_error("grid resolution " + std::to_string(m) +
                             " is below the Nyquist guard " + std::to_string(required)) {}
};

class UnknownFrequency : public std::runtime_error {
public:
    UnknownFrequency(long long x1, long long x2)
        : std::runtime_error("(" + std::to_string(x1) + "," + std::to_string(x2) +
                             ") is not in the positive half of the frequency set") {}
};

class DegenerateSpectrum : public std::runtime_error {
public:
    DegenerateSpectrum()
        : std::runtime_error("fourth Fourier coefficient is +/-1; "
                             "second-chaos coefficient space is degenerate") {}
};

class UnresolvedCriticalCell : public std::runtime_error {
public:
    UnresolvedCriticalCell(int i, int j)
        : std::runtime_error("cannot classify the critical point in cell (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             ") at this resolution") {}
};

class InsufficientData : public std::runtime_error {
public:
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

class SchemaMismatch : public std::runtime_error {
public:
    explicit SchemaMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arw
