#ifndef GRAPHYPS_ERROR_HPP
#define GRAPHYPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphyps {

// Library-wide error with a coarse kind so the C API can map it to a status
// code without parsing messages.
class Error : public std::runtime_error {
public:
    enum class Kind {
        Domain,    // valid request, mathematically refused (e.g. divergent input)
        Bound,     // desk-scale size/budget limit exceeded
        Usage,     // malformed request (bad parameters)
        Parse,     // malformed input document
        Overflow,  // exact integer arithmetic would overflow
    };

    Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) { throw Error(k, msg); }

} // namespace graphyps

#endif
