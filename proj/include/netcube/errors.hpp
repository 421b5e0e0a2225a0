#pragma once

#include <stdexcept>
#include <string>

namespace netcube {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a net or complex description. line/column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class SemanticError : public Error {
public:
    SemanticError(const std::string& msg, std::string ident)
        : Error(msg + ": '" + ident + "'"), ident_(std::move(ident)) {}
    const std::string& identifier() const { return ident_; }

private:
    std::string ident_;
};

class NotEnabled : public Error {
public:
    using Error::Error;
};

class NotCoEnabled : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(long long budget)
        : Error("budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
    long long budget() const { return budget_; }

private:
    long long budget_;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class UnknownLetter : public Error {
public:
    using Error::Error;
};

class InsufficientDepth : public Error {
public:
    using Error::Error;
};

}  // namespace netcube
