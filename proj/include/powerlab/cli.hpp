/* Copyright 2026 The powerlab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Command-line front end. Machine output (JSON, CSV, words) goes to `out`,
// diagnostics and human summaries to `err`, except `verify` which writes its
// summary to `out` unless the report itself is sent there.

#ifndef POWERLAB_CLI_HPP
#define POWERLAB_CLI_HPP

#include <cstddef>
#include <iosfwd>

namespace powerlab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

inline constexpr std::size_t default_listing_ceiling = 64;

// POWERLAB_MAX_ENUM if set to a valid integer, else default_listing_ceiling.
std::size_t listing_ceiling();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace powerlab::cli

#endif // POWERLAB_CLI_HPP
