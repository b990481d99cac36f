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

// Library walk-through on the 1,2,3,9 instance: EFX fails everywhere, EFX_WC
// holds for a given allocation, and its dual is EFX for chores.

#include <iostream>

#include "fairdual/fairdual.hpp"

int main(int argc, char** argv) {
  namespace fd = fairdual;
  const std::string dir = argc > 1 ? argv[1] : "samples";
  const fd::InstanceDocument doc = fd::ReadInstanceFile(dir + "/copies-1239.json");
  const fd::Instance& in = doc.instance;
  const fd::Allocation a =
      fd::ReadAllocationFile(dir + "/copies-1239-efxwc.json", in);

  const fd::Criterion efx{fd::Base::kEFX, fd::Orientation::kGoods, false};
  const fd::Criterion efx_wc = efx.WithoutCommons();

  const auto none = fd::ExistsFair(in, efx);
  std::cout << "EFX exists: " << std::boolalpha << none.exists << " ("
            << none.checked << " allocations)\n";
  std::cout << "A is EFX_WC: " << fd::IsFair(in, a, efx_wc).fair << "\n";

  const fd::DualResult dual = fd::Dualize(doc, a);
  const bool dual_fair =
      fd::IsFair(dual.dual.instance, *dual.allocation, efx.Complement()).fair;
  std::cout << "dual allocation is EFX for chores: " << dual_fair << "\n";
  std::cout << "MMS of agent 1: " << fd::Mms(in, 0).value << ", PROP "
            << fd::Prop(in, 0) << "\n";
  return !none.exists && dual_fair ? 0 : 1;
}
