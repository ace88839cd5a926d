#include "infoclust/sfm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "infoclust/error.hpp"
#include "infoclust/hypergraph.hpp"
#include "infoclust/kernels.hpp"
#include "infoclust/maxflow.hpp"

namespace infoclust {

namespace {

// g(A) = f(A' ∪ {l}) - f({l}) where A' maps local indices to `others`.
class PinnedOracle : public SubmodularOracle {
 public:
  PinnedOracle(const SubmodularOracle& f, std::vector<std::size_t> others, std::size_t pinned)
      : f_(f), others_(std::move(others)), pinned_(pinned), base_(f(Subset::singleton(pinned))) {}

  std::size_t size() const override { return others_.size(); }
  double operator()(const Subset& a) const override { return f_(to_global(a)) - base_; }
  Subset to_global(const Subset& a) const {
    Subset g = Subset::singleton(pinned_);
    a.for_each([&](std::size_t i) { g.insert(others_[i]); });
    return g;
  }

 private:
  const SubmodularOracle& f_;
  std::vector<std::size_t> others_;
  std::size_t pinned_;
  double base_;
};

// Greedy vertex of the base polytope of f - f(∅) for the order of
// increasing w (ties by index): the minimizer of w·q over the polytope.
Eigen::VectorXd greedy_vertex(const SubmodularOracle& f, const Eigen::VectorXd& w, double f0) {
  const auto n = static_cast<std::size_t>(w.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return w(static_cast<Eigen::Index>(a)) < w(static_cast<Eigen::Index>(b));
  });
  Eigen::VectorXd q(w.size());
  Subset prefix;
  double prev = f0;
  for (auto i : order) {
    prefix.insert(i);
    const double cur = f(prefix);
    q(static_cast<Eigen::Index>(i)) = cur - prev;
    prev = cur;
  }
  return q;
}

// Affine combination of the columns of P with minimum norm.
Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& P) {
  const Eigen::Index k = P.cols();
  Eigen::MatrixXd A(k + 1, k + 1);
  A.topLeftCorner(k, k) = P.transpose() * P;
  A.topRightCorner(k, 1).setOnes();
  A.bottomLeftCorner(1, k).setOnes();
  A(k, k) = 0.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  const Eigen::VectorXd sol = A.colPivHouseholderQr().solve(rhs);
  Eigen::VectorXd alpha = sol.head(k);
  const double s = alpha.sum();
  if (std::abs(s) > 0.0) alpha /= s;
  return alpha;
}

double lower_bound(const Eigen::VectorXd& x, double f0) {
  double b = f0;
  for (Eigen::Index i = 0; i < x.size(); ++i) b += std::min(0.0, x(i));
  return b;
}

void add_coverage(MaxFlow& g, const std::vector<std::size_t>& nodes, std::size_t t, double c) {
  if (nodes.empty()) return;
  if (nodes.size() == 1) {
    g.add_edge(nodes[0], t, c);
    return;
  }
  const auto a = g.add_node();
  for (auto v : nodes) g.add_edge(v, a, MaxFlow::kInfinity);
  g.add_edge(a, t, c);
}

}  // namespace

std::string to_string(SfmMode mode) {
  switch (mode) {
    case SfmMode::kAuto:
      return "auto";
    case SfmMode::kExhaustive:
      return "exhaustive";
    case SfmMode::kMinNormPoint:
      return "mnp";
  }
  return "auto";
}

std::string to_string(SfmMethod method) {
  switch (method) {
    case SfmMethod::kExhaustive:
      return "exhaustive";
    case SfmMethod::kMinNormPoint:
      return "minimum-norm-point";
    case SfmMethod::kMinCut:
      return "min-cut";
  }
  return "exhaustive";
}

SfmMode parse_sfm_mode(const std::string& text) {
  if (text == "auto") return SfmMode::kAuto;
  if (text == "exhaustive") return SfmMode::kExhaustive;
  if (text == "mnp") return SfmMode::kMinNormPoint;
  throw InputError("unknown SFM mode '" + text + "' (expected auto, exhaustive or mnp)");
}

MinNormPointResult minimum_norm_point(const SubmodularOracle& f, const SfmOptions& options) {
  const std::size_t n = f.size();
  const double f0 = f(Subset{});
  MinNormPointResult out;
  if (n == 0) {
    out.value = f0;
    return out;
  }
  const std::size_t budget =
      options.mnp_max_steps ? options.mnp_max_steps
                            : (n >= 17 ? std::size_t{1000000}
                                       : std::min<std::size_t>(1000000, 10 * (std::size_t{1} << n)));
  const auto dim = static_cast<Eigen::Index>(n);
  constexpr double kTiny = 1e-12;

  std::vector<Eigen::VectorXd> points{greedy_vertex(f, Eigen::VectorXd::Zero(dim), f0)};
  std::vector<double> lambda{1.0};
  Eigen::VectorXd x = points[0];
  std::size_t steps = 0;

  auto as_matrix = [&]() {
    Eigen::MatrixXd P(dim, static_cast<Eigen::Index>(points.size()));
    for (std::size_t k = 0; k < points.size(); ++k) P.col(static_cast<Eigen::Index>(k)) = points[k];
    return P;
  };

  while (true) {
    const Eigen::VectorXd q = greedy_vertex(f, x, f0);
    const double norm2 = x.squaredNorm();
    if (norm2 - x.dot(q) <= options.mnp_eps * std::max(1.0, norm2)) break;
    bool known = false;
    for (const auto& p : points) known = known || (p - q).squaredNorm() <= kTiny * std::max(1.0, q.squaredNorm());
    if (known) break;
    points.push_back(q);
    lambda.push_back(0.0);

    while (true) {
      if (++steps > budget) {
        throw SolverError("minimum-norm-point exceeded " + std::to_string(budget) + " steps", lower_bound(x, f0));
      }
      const Eigen::MatrixXd P = as_matrix();
      const Eigen::VectorXd alpha = affine_minimizer(P);
      if (!alpha.allFinite()) throw SolverError("minimum-norm-point affine step failed", lower_bound(x, f0));
      if (alpha.minCoeff() > kTiny) {
        for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] = alpha(static_cast<Eigen::Index>(k));
        x = P * alpha;
        break;
      }
      double theta = 1.0;
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        const double a = alpha(static_cast<Eigen::Index>(k));
        if (a <= kTiny) theta = std::min(theta, lambda[k] / (lambda[k] - a));
      }
      std::vector<Eigen::VectorXd> kept_points;
      std::vector<double> kept_lambda;
      double total = 0.0;
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        const double l = (1.0 - theta) * lambda[k] + theta * alpha(static_cast<Eigen::Index>(k));
        if (l > kTiny) {
          kept_points.push_back(points[k]);
          kept_lambda.push_back(l);
          total += l;
        }
      }
      if (kept_points.empty()) throw SolverError("minimum-norm-point lost its support", lower_bound(x, f0));
      points = std::move(kept_points);
      lambda = std::move(kept_lambda);
      x = Eigen::VectorXd::Zero(dim);
      for (std::size_t k = 0; k < points.size(); ++k) {
        lambda[k] /= total;
        x += lambda[k] * points[k];
      }
      if (points.size() == 1) break;
    }
  }

  // Minimal minimizer: shortest prefix of the x-ordering attaining the best
  // prefix value, never dropping elements that are clearly negative.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x(static_cast<Eigen::Index>(a)) < x(static_cast<Eigen::Index>(b));
  });
  std::vector<double> prefix_values{f0};
  Subset prefix;
  std::size_t certain = 0;
  for (auto i : order) {
    prefix.insert(i);
    prefix_values.push_back(f(prefix));
    if (x(static_cast<Eigen::Index>(i)) < -options.mnp_support) ++certain;
  }
  const double best = *std::min_element(prefix_values.begin(), prefix_values.end());
  const double tol = options.tol * std::max(1.0, std::abs(f(Subset::full(n))));
  std::size_t k = certain;
  while (k < n && prefix_values[k] > best + tol) ++k;
  if (prefix_values[k] > best + tol) k = static_cast<std::size_t>(
      std::min_element(prefix_values.begin(), prefix_values.end()) - prefix_values.begin());

  out.x.assign(x.data(), x.data() + x.size());
  for (std::size_t r = 0; r < k; ++r) out.minimizer.insert(order[r]);
  out.value = prefix_values[k];
  out.steps = steps;
  return out;
}

SfmResult min_cut_pinned(const CutForm& form, std::size_t ground_size, const Subset& universe, std::size_t pinned) {
  if (!form.graph) throw InputError("cut form has no graph");
  if (!(form.scale >= 0.0)) throw InputError("cut form needs a non-negative scale");
  const auto& graph = *form.graph;
  if (graph.size() != ground_size) throw InputError("cut form graph does not match the ground set");

  std::vector<std::size_t> node_of(ground_size, ground_size);
  const auto elems = universe.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) node_of[elems[k]] = k;
  MaxFlow g(elems.size() + 2);
  const std::size_t s = elems.size();
  const std::size_t t = elems.size() + 1;
  double constant = form.constant;
  double finite_total = 0.0;

  auto nodes_of = [&](const Subset& vs) {
    std::vector<std::size_t> out;
    vs.for_each([&](std::size_t v) {
      if (v < ground_size && node_of[v] < ground_size) out.push_back(node_of[v]);
    });
    return out;
  };

  for (const auto& e : graph.edges()) {
    const double c = form.scale * e.weight;
    if (c == 0.0) continue;
    const auto inside = nodes_of(e.vertices);
    if (inside.empty()) continue;
    finite_total += c;
    switch (form.kind) {
      case CutKind::kCoverage:
        add_coverage(g, inside, t, c);
        break;
      case CutKind::kInCut: {
        const std::size_t head = graph.head_of(e);
        if (node_of[head] >= ground_size) {
          add_coverage(g, inside, t, c);
          break;
        }
        std::vector<std::size_t> tails;
        for (auto v : inside) {
          if (v != node_of[head]) tails.push_back(v);
        }
        if (tails.empty()) break;
        if (tails.size() == 1) {
          g.add_edge(tails[0], node_of[head], c);
        } else {
          const auto a = g.add_node();
          for (auto v : tails) g.add_edge(v, a, MaxFlow::kInfinity);
          g.add_edge(a, node_of[head], c);
        }
        break;
      }
      case CutKind::kUndirectedCut: {
        if (inside.size() != e.vertices.count()) {
          add_coverage(g, inside, t, c);
          break;
        }
        if (inside.size() == 1) break;
        if (inside.size() == 2) {
          g.add_edge(inside[0], inside[1], c);
          g.add_edge(inside[1], inside[0], c);
          break;
        }
        // c[touches B] + c[misses some vertex of e] - c
        add_coverage(g, inside, t, c);
        const auto b = g.add_node();
        g.add_edge(s, b, c);
        for (auto v : inside) g.add_edge(b, v, MaxFlow::kInfinity);
        constant -= c;
        finite_total += c;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const double w = elems[k] < form.modular.size() ? form.modular[elems[k]] : 0.0;
    if (w > 0.0) {
      g.add_edge(k, t, w);
    } else if (w < 0.0) {
      g.add_edge(s, k, -w);
      constant += w;
    }
    finite_total += std::abs(w);
  }
  g.add_edge(s, node_of[pinned], MaxFlow::kInfinity);

  const double flow = g.solve(s, t, 1e-12 * std::max(1.0, finite_total));
  const auto side = g.source_side();
  SfmResult out;
  out.method = SfmMethod::kMinCut;
  out.value = flow + constant;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (side[k]) out.minimizer.insert(elems[k]);
  }
  return out;
}

SfmResult sfm_pinned(const SubmodularOracle& f, const Subset& universe, std::size_t pinned,
                     const SfmOptions& options) {
  if (!universe.contains(pinned)) throw InputError("pinned element is not in the universe");
  if (universe.bound() > f.size()) throw InputError("universe is outside the ground set");
  const std::size_t n = universe.count();
  const double tol = options.tol * std::max(1.0, std::abs(f(universe)));

  if (options.mode == SfmMode::kAuto && n > 1) {
    if (auto form = f.cut_form(); form && form->scale >= 0.0) {
      auto r = min_cut_pinned(*form, f.size(), universe, pinned);
      r.value = f(r.minimizer);
      return r;
    }
  }

  const bool enumerate = options.mode == SfmMode::kExhaustive ||
                         (options.mode == SfmMode::kAuto && n <= options.exhaustive_limit);
  if (enumerate || n == 1) {
    const auto elems = universe.elements();
    const auto r = options.parallel ? kernels::exhaustive_pinned_min_parallel(f, elems, pinned, tol)
                                    : kernels::exhaustive_pinned_min_serial(f, elems, pinned, tol);
    return {r.value, r.minimizer, SfmMethod::kExhaustive};
  }

  std::vector<std::size_t> others;
  universe.for_each([&](std::size_t i) {
    if (i != pinned) others.push_back(i);
  });
  const PinnedOracle g(f, others, pinned);
  const auto r = minimum_norm_point(g, options);
  SfmResult out;
  out.method = SfmMethod::kMinNormPoint;
  out.minimizer = g.to_global(r.minimizer);
  out.value = f(out.minimizer);
  return out;
}

}  // namespace infoclust
