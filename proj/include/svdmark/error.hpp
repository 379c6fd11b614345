#ifndef SVDMARK_ERROR_HPP
#define SVDMARK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace svdmark {

enum class errc {
    argument,   // bad parameter value
    io,         // file missing / unreadable / unwritable
    format,     // malformed or unsupported file content
    dimension,  // image/grid size contract violated
    key,        // invalid key material (a, b, k, watermark)
    bounds,     // region outside the target image
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace svdmark

#endif
