// Copyright 2026 The PLA Authors
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

#include "pla/ids.h"

#include <algorithm>

#include "pla/errors.h"

namespace pla {

bool IsDigitId(std::string_view text) {
  return !text.empty() && text.size() <= kMaxIdLength &&
         std::all_of(text.begin(), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

template <typename Tag>
DigitId<Tag>::DigitId(std::string_view text) : value_(text) {
  if (!IsDigitId(text)) throw InvalidId(std::string(text));
}

template class DigitId<ProfileIdTag>;
template class DigitId<CommunityIdTag>;

}  // namespace pla
