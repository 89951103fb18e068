#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace cosma
{

struct bundled_asset
{
    std::string_view name;
    std::string_view text;
};

// The TLC benchmark files, compiled into the library.
std::span<const bundled_asset> bundled_assets();
std::optional<std::string_view> find_asset( std::string_view name );

} // namespace cosma
