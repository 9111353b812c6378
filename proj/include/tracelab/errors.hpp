#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tracelab {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class FieldMismatch : public Error {
  public:
    using Error::Error;
};

class AmbientMismatch : public Error {
  public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
  public:
    using Error::Error;
};

class NotSubmodule : public Error {
  public:
    using Error::Error;
};

class NotCommutative : public Error {
  public:
    using Error::Error;
};

class FieldNotFinite : public Error {
  public:
    using Error::Error;
};

// Enumeration exceeded the caller-supplied cap.
class EnumOverflow : public Error {
  public:
    explicit EnumOverflow(long long cap)
        : Error("enumeration exceeded cap " + std::to_string(cap)), cap(cap) {}
    long long cap;
};

class RadicalUnsupported : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations(std::move(violations)) {}
    std::vector<std::string> violations;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed:";
        for (const auto& x : v) {
            s += "\n  - " + x;
        }
        return s;
    }
};

class UnknownSuite : public Error {
  public:
    using Error::Error;
};

class MatchFailure : public Error {
  public:
    using Error::Error;
};

// A computation contradicted something that is supposed to be a theorem or a
// construction guarantee. Always indicates a bug (or a falsified lemma).
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace tracelab
