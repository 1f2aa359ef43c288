// Copyright 2026 The rslist Authors
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

#ifndef RSLIST_FLOW_H_
#define RSLIST_FLOW_H_

#include <cstddef>
#include <vector>

namespace rslist {

// Small integer-capacity flow network with BFS augmenting paths. Intended for
// unit-capacity networks with a handful of nodes, where the flow value needed
// is small and augmentations can stop early.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void AddArc(std::size_t from, std::size_t to, int capacity);

  // Max flow value, or `limit` if at least that much flow exists.
  int MaxFlow(std::size_t source, std::size_t sink, int limit);

 private:
  struct Arc {
    std::size_t to;
    int capacity;
    std::size_t reverse;
  };
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace rslist

#endif  // RSLIST_FLOW_H_
