#include "infoclust/maxflow.hpp"

#include <algorithm>
#include <queue>

#include "infoclust/error.hpp"

namespace infoclust {

MaxFlow::MaxFlow(std::size_t nodes) : adj_(nodes) {}

std::size_t MaxFlow::add_node() {
  adj_.emplace_back();
  return adj_.size() - 1;
}

void MaxFlow::add_edge(std::size_t from, std::size_t to, double capacity) {
  if (from >= adj_.size() || to >= adj_.size()) throw InputError("max-flow edge endpoint out of range");
  if (!(capacity >= 0.0)) throw InputError("max-flow capacity must be non-negative");
  if (from == to || capacity == 0.0) return;
  adj_[from].push_back({to, adj_[to].size(), capacity});
  adj_[to].push_back({from, adj_[from].size() - 1, 0.0});
}

bool MaxFlow::build_levels() {
  level_.assign(adj_.size(), -1);
  std::queue<std::size_t> q;
  level_[s_] = 0;
  q.push(s_);
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    for (const auto& a : adj_[v]) {
      if (a.cap > eps_ && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t_] >= 0;
}

double MaxFlow::push(std::size_t v, double limit) {
  if (v == t_) return limit;
  for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
    auto& a = adj_[v][i];
    if (a.cap <= eps_ || level_[a.to] != level_[v] + 1) continue;
    const double got = push(a.to, std::min(limit, a.cap));
    if (got > 0.0) {
      a.cap -= got;
      adj_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0.0;
}

double MaxFlow::solve(std::size_t s, std::size_t t, double eps) {
  s_ = s;
  t_ = t;
  eps_ = eps;
  double flow = 0.0;
  while (build_levels()) {
    next_.assign(adj_.size(), 0);
    while (true) {
      const double f = push(s_, kInfinity);
      if (!(f > 0.0)) break;
      if (f == kInfinity) throw SolverError("max-flow has an infinite-capacity path");
      flow += f;
    }
  }
  return flow;
}

std::vector<bool> MaxFlow::source_side() const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<std::size_t> stack{s_};
  seen[s_] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& a : adj_[v]) {
      if (a.cap > eps_ && !seen[a.to]) {
        seen[a.to] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace infoclust
