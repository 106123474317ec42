#ifndef CBIR_ERRORS_HPP
#define CBIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cbir {

/// Base class for all typed errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// raster
class UnsupportedFormat : public Error { using Error::Error; };
class Malformed : public Error { using Error::Error; };

// features
class EmptySample : public Error { using Error::Error; };
class ZeroMass : public Error { using Error::Error; };
class DegenerateGrid : public Error { using Error::Error; };

// index
class DuplicateId : public Error { using Error::Error; };
class NotFound : public Error { using Error::Error; };
class BadMagic : public Error { using Error::Error; };
class MalformedRecord : public Error {
public:
    MalformedRecord(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

// synth
class ShapeOutOfFrame : public Error { using Error::Error; };
class ContentClipped : public Error { using Error::Error; };

} // namespace cbir

#endif
