#include "infoclust/oracle.hpp"

#include "infoclust/error.hpp"
#include "infoclust/kernels.hpp"

namespace infoclust {

std::shared_ptr<const SubmodularOracle> SubmodularOracle::restrict_to(const Subset& b) const {
  return std::make_shared<RestrictedOracle>(borrow(*this), b);
}

OraclePtr borrow(const SubmodularOracle& oracle) {
  return OraclePtr(std::shared_ptr<const SubmodularOracle>{}, &oracle);
}

TableSource::TableSource(std::size_t m, std::vector<double> values, double log_base)
    : m_(m), values_(std::move(values)), log_base_(log_base) {
  if (m > 24) throw InputError("table sources are limited to 24 elements");
  if (values_.size() != (std::size_t{1} << m)) {
    throw InputError("table has " + std::to_string(values_.size()) + " entries, expected 2^" + std::to_string(m));
  }
}

TableSource TableSource::from_entries(std::size_t m, const std::vector<std::pair<Subset, double>>& entries,
                                      std::optional<double> missing) {
  if (m > 24) throw InputError("table sources are limited to 24 elements");
  const std::size_t n = std::size_t{1} << m;
  std::vector<double> values(n, 0.0);
  std::vector<bool> given(n, false);
  given[0] = true;
  for (const auto& [b, v] : entries) {
    if (b.bound() > m) throw InputError("table entry " + b.to_string() + " is outside the ground set");
    values[b.mask()] = v;
    given[b.mask()] = true;
  }
  for (std::size_t mask = 1; mask < n; ++mask) {
    if (given[mask]) continue;
    if (!missing) throw InputError("table is missing the value of " + Subset::from_mask(mask).to_string());
    values[mask] = *missing;
  }
  return TableSource(m, std::move(values));
}

TableSource TableSource::tabulate(const SubmodularOracle& source) {
  return TableSource(source.size(), kernels::tabulate_parallel(source), source.log_base());
}

RestrictedOracle::RestrictedOracle(OraclePtr base, const Subset& domain)
    : base_(std::move(base)), local_to_global_(domain.elements()) {
  if (domain.bound() > base_->size()) throw InputError("restriction domain is outside the ground set");
}

Subset RestrictedOracle::to_global(const Subset& local) const {
  Subset g;
  local.for_each([&](std::size_t i) { g.insert(local_to_global_.at(i)); });
  return g;
}

double RestrictedOracle::operator()(const Subset& b) const { return (*base_)(to_global(b)); }

AffineOracle::AffineOracle(OraclePtr base, double scale, double shift_per_element, double offset)
    : base_(std::move(base)), scale_(scale), shift_(shift_per_element), offset_(offset) {}

double AffineOracle::operator()(const Subset& b) const {
  if (b.empty()) return scale_ * (*base_)(b);
  return scale_ * (*base_)(b) + shift_ * static_cast<double>(b.count()) + offset_;
}

std::optional<CutForm> AffineOracle::cut_form() const {
  auto form = base_->cut_form();
  if (!form) return std::nullopt;
  form->modular.resize(size(), 0.0);
  form->scale *= scale_;
  for (auto& w : form->modular) w = scale_ * w + shift_;
  form->constant = scale_ * form->constant + offset_;
  return form;
}

ResidualOracle::ResidualOracle(const SubmodularOracle& base, double gamma, const std::vector<double>& x)
    : base_(base), gamma_(gamma), x_(x) {}

double ResidualOracle::operator()(const Subset& b) const {
  if (b.empty()) return base_(b);
  double v = base_(b) - gamma_;
  b.for_each([&](std::size_t i) { v -= x_[i]; });
  return v;
}

std::optional<CutForm> ResidualOracle::cut_form() const {
  auto form = base_.cut_form();
  if (!form) return std::nullopt;
  form->modular.resize(size(), 0.0);
  for (std::size_t i = 0; i < form->modular.size() && i < x_.size(); ++i) form->modular[i] -= x_[i];
  form->constant -= gamma_;
  return form;
}

}  // namespace infoclust
