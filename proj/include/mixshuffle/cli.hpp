/* Copyright 2026 The mixshuffle Authors. All Rights Reserved.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mixshuffle/semigroup.hpp"

namespace mixshuffle {

// Exit codes: 0 success / verified, 1 falsification, 2 configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// free:x,y  set:a,b  monoid:x  mu:p[,k]  cyclic:p  idem3:p  idem:<file>  <file.json>  {inline json}
SemigroupPtr parse_semigroup_preset(const std::string& text);

} // namespace mixshuffle
