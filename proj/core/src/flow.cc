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

#include "rslist/flow.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

namespace rslist {

void FlowNetwork::AddArc(std::size_t from, std::size_t to, int capacity) {
  adj_[from].push_back({to, capacity, adj_[to].size() + (from == to ? 1 : 0)});
  adj_[to].push_back({from, 0, adj_[from].size() - 1});
}

int FlowNetwork::MaxFlow(std::size_t source, std::size_t sink, int limit) {
  if (source == sink) return limit;
  int flow = 0;
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size());
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), std::make_pair(none, none));
    parent[source] = {source, none};
    std::queue<std::size_t> queue;
    queue.push(source);
    while (!queue.empty() && parent[sink].first == none) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t a = 0; a < adj_[v].size(); ++a) {
        const Arc& arc = adj_[v][a];
        if (arc.capacity > 0 && parent[arc.to].first == none) {
          parent[arc.to] = {v, a};
          queue.push(arc.to);
        }
      }
    }
    if (parent[sink].first == none) break;
    int push = limit - flow;
    for (std::size_t v = sink; v != source; v = parent[v].first) {
      push = std::min(push, adj_[parent[v].first][parent[v].second].capacity);
    }
    for (std::size_t v = sink; v != source; v = parent[v].first) {
      Arc& arc = adj_[parent[v].first][parent[v].second];
      arc.capacity -= push;
      adj_[v][arc.reverse].capacity += push;
    }
    flow += push;
  }
  return flow;
}

}  // namespace rslist
