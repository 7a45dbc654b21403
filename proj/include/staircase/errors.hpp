#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

/// Base class for all domain errors. `name()` is the stable identifier the
/// CLI prints on stderr; `what()` carries the human-readable detail.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A part exceeds its staircase bound. `index()` is the first offending
/// 1-based part index.
class staircase_violation : public error {
public:
    staircase_violation(int index, const std::string& detail)
        : error("StaircaseViolation", detail), index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

/// Two values of different ambient degree were combined.
class degree_mismatch : public error {
public:
    explicit degree_mismatch(const std::string& detail)
        : error("DegreeMismatch", detail) {}
};

/// An ill-posed query: a row, column, position or amount outside its
/// admissible range. Distinct from a well-posed query whose answer is false.
class index_error : public error {
public:
    explicit index_error(const std::string& detail)
        : error("IndexError", detail) {}
};

/// next_smaller() was asked for a part with no smaller part after it,
/// which only happens when the part itself is zero.
class no_descent : public error {
public:
    explicit no_descent(const std::string& detail)
        : error("NoDescent", detail) {}
};

class not_removable : public error {
public:
    explicit not_removable(const std::string& detail)
        : error("NotRemovable", detail) {}
};

class not_insertable : public error {
public:
    explicit not_insertable(const std::string& detail)
        : error("NotInsertable", detail) {}
};

/// The word does not match the requested move pattern at the given position.
class pattern_mismatch : public error {
public:
    explicit pattern_mismatch(const std::string& detail)
        : error("PatternMismatch", detail) {}
};

/// A cover witness that does not certify an actual cover.
class invalid_witness : public error {
public:
    explicit invalid_witness(const std::string& detail)
        : error("InvalidWitness", detail) {}
};

class parse_error : public error {
public:
    explicit parse_error(const std::string& detail)
        : error("ParseError", detail) {}
};

/// A request refused by a resource guard (e.g. hasse above the degree cap).
class resource_limit : public error {
public:
    explicit resource_limit(const std::string& detail)
        : error("ResourceLimit", detail) {}
};

} // namespace staircase
