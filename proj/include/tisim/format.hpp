// Copyright 2026 The tisim developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TISIM_FORMAT_HPP
#define TISIM_FORMAT_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace tisim {

/// 17 significant digits: enough to round-trip any double exactly, and the
/// fixed width keeps serialized artifacts byte-stable.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// FNV-1a, as a 16-hex-digit string. Used to fingerprint configurations in
/// reports and to detect accidentally mixed result sets.
inline std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace tisim

#endif // TISIM_FORMAT_HPP
