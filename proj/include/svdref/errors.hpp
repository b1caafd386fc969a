#ifndef SVDREF_ERRORS_HPP
#define SVDREF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svdref {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// Repeated or zero singular value where the regular solver needs a gap.
class DegenerateSpectrumError : public Error {
public:
    DegenerateSpectrumError(const std::string& what, std::size_t i, std::size_t j)
        : Error(what), index_i(i), index_j(j) {}
    std::size_t index_i, index_j;
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace svdref

#endif
