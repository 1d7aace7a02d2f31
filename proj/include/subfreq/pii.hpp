#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace subfreq {

/// Masks emails, web addresses (with or without protocol) and
/// @-handles in a raw line, replacing each span with its sentinel.
/// Runs before tokenization so the punctuation-laden patterns survive.
/// Protocol-less addresses need a host.tld/path-or-query shape.
std::string mask_pii_line(std::string_view line);

/// Token-level masking: emails, URLs, handles and all-digit runs become
/// sentinels (precedence email > url > handle > digits). 1:1, idempotent.
std::vector<std::string> mask_pii(std::vector<std::string> tokens);

} // namespace subfreq
