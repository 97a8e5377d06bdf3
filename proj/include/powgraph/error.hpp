#pragma once

#include <stdexcept>
#include <string>

namespace powgraph {

// Library error with a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* table_not_group = "TableNotGroup";
inline constexpr const char* bad_spec = "BadSpec";
inline constexpr const char* empty_set = "EmptySet";
inline constexpr const char* not_finite_order_component = "NotFiniteOrderComponent";
inline constexpr const char* not_an_equiv_class = "NotAnEquivClass";
inline constexpr const char* profile_inconsistent = "ProfileInconsistent";
inline constexpr const char* structure_error = "StructureError";
inline constexpr const char* size_mismatch = "SizeMismatch";
inline constexpr const char* identity_argument = "IdentityArgument";
inline constexpr const char* window_too_small = "WindowTooSmall";
inline constexpr const char* threshold_undecided = "ThresholdUndecided";
inline constexpr const char* size_limit = "SizeLimit";
}  // namespace errc

}  // namespace powgraph
