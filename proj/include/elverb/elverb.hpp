// Copyright 2026 The elverb Authors
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

// Umbrella header.

#ifndef ELVERB_ELVERB_HPP
#define ELVERB_ELVERB_HPP

#include "elverb/classifier.hpp"
#include "elverb/errors.hpp"
#include "elverb/eval.hpp"
#include "elverb/model.hpp"
#include "elverb/parser.hpp"
#include "elverb/planner.hpp"
#include "elverb/realizer.hpp"
#include "elverb/survey.hpp"

#endif  // ELVERB_ELVERB_HPP
