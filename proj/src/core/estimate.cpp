/*
   Copyright 2026 The polarlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polarlab/core/estimate.hpp"

namespace polarlab::core {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::certified_lower_bound:
      return "certified-lower-bound";
    case Direction::statistical:
      return "statistical-mean";
    case Direction::exact:
      return "exact";
  }
  return "unknown";
}

}  // namespace polarlab::core
