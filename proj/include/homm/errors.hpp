#ifndef HOMM_ERRORS_HPP
#define HOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homm {

// Input data could not be parsed (carries a line number when known).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A request is structurally valid but infeasible or inconsistent
// (e.g. a sample budget for an empty size class).
class config_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homm

#endif
