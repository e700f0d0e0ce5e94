// SPDX-License-Identifier: Apache-2.0
//
// wavail - wireless availability planning toolkit
// Copyright (C) 2026 The wavail authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef WAVAIL_FORMAT_HPP
#define WAVAIL_FORMAT_HPP

#include <charconv>
#include <string>

namespace wavail {

// Shortest decimal text that parses back to the same double.
inline std::string fmt_num(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

}  // namespace wavail

#endif  // WAVAIL_FORMAT_HPP
