// Copyright 2026 The ortega authors
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

#ifndef ORTEGA_ORTEGA_HPP_
#define ORTEGA_ORTEGA_HPP_

#include "ortega/corpus.hpp"
#include "ortega/engine.hpp"
#include "ortega/oracle.hpp"
#include "ortega/rational.hpp"
#include "ortega/seeds.hpp"

#endif  // ORTEGA_ORTEGA_HPP_
