// Copyright 2026 The Authors.
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

#ifndef FAIRDUAL_FAIRDUAL_HPP_
#define FAIRDUAL_FAIRDUAL_HPP_

#include "fairdual/criteria.hpp"
#include "fairdual/duality.hpp"
#include "fairdual/enumeration.hpp"
#include "fairdual/errors.hpp"
#include "fairdual/exact_lp.hpp"
#include "fairdual/fixtures.hpp"
#include "fairdual/json_io.hpp"
#include "fairdual/leveled.hpp"
#include "fairdual/model.hpp"
#include "fairdual/rational.hpp"
#include "fairdual/search.hpp"
#include "fairdual/shares.hpp"
#include "fairdual/sweep.hpp"

#endif  // FAIRDUAL_FAIRDUAL_HPP_
