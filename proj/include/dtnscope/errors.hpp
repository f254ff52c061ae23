#pragma once

#include <stdexcept>
#include <string>

namespace dtnscope {

/// Raised by parse_eid for unknown schemes, non-numeric ipn parts or an
/// empty dtn authority.
struct MalformedEid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by decode_bundle on truncation, bad CBOR structure, an
/// unsupported version or a CRC mismatch.
struct MalformedBundle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedBpdu : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateRegistration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Configuration rejection; `path` points at the offending key
/// (e.g. "instances[1].routes[0].cla").
struct ConfigInvalid : std::runtime_error {
    ConfigInvalid(std::string path_, const std::string& what_)
        : std::runtime_error(path_ + ": " + what_), path(std::move(path_)) {}
    std::string path;
};

struct UnknownProfile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dtnscope
