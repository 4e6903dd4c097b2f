#include <sstream>

#include "geoforge/error.hpp"
#include "geoforge/group.hpp"

namespace geoforge {
namespace {

class PermArithmetic final : public Arithmetic {
 public:
  explicit PermArithmetic(std::size_t degree) : degree_(degree) {}

  Element identity() const override { return Permutation(degree_); }
  Element multiply(const Element& a, const Element& b) const override { return a.perm() * b.perm(); }
  Element inverse(const Element& a) const override { return a.perm().inverse(); }
  bool is_permutation() const noexcept override { return true; }
  std::size_t degree() const noexcept override { return degree_; }
  bool compatible(const Arithmetic& other) const noexcept override {
    return other.is_permutation() && other.degree() == degree_;
  }
  std::string describe() const override { return "Perm(" + std::to_string(degree_) + ")"; }

 private:
  std::size_t degree_;
};

class SemidirectArithmetic final : public Arithmetic {
 public:
  SemidirectArithmetic(ArithmeticPtr target, ArithmeticPtr actor, std::shared_ptr<const GroupAction> action)
      : target_(std::move(target)), actor_(std::move(actor)), action_(std::move(action)) {}

  Element identity() const override { return Element::pair(target_->identity(), actor_->identity()); }

  Element multiply(const Element& x, const Element& y) const override {
    const Element& b1 = x.second();
    return Element::pair(target_->multiply(x.first(), action_->apply(b1, y.first())),
                         actor_->multiply(b1, y.second()));
  }

  Element inverse(const Element& x) const override {
    Element binv = actor_->inverse(x.second());
    return Element::pair(action_->apply(binv, target_->inverse(x.first())), std::move(binv));
  }

  std::string describe() const override {
    return "(" + target_->describe() + " x| " + actor_->describe() + ")";
  }

 private:
  ArithmeticPtr target_;
  ArithmeticPtr actor_;
  std::shared_ptr<const GroupAction> action_;
};

class ProductArithmetic final : public Arithmetic {
 public:
  explicit ProductArithmetic(std::vector<ArithmeticPtr> factors) : factors_(std::move(factors)) {}

  Element identity() const override {
    std::vector<Element> parts;
    parts.reserve(factors_.size());
    for (const auto& f : factors_) parts.push_back(f->identity());
    return Element::tuple(std::move(parts));
  }

  Element multiply(const Element& a, const Element& b) const override {
    check(a);
    check(b);
    std::vector<Element> parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
      parts.push_back(factors_[i]->multiply(a.parts()[i], b.parts()[i]));
    return Element::tuple(std::move(parts));
  }

  Element inverse(const Element& a) const override {
    check(a);
    std::vector<Element> parts;
    parts.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->inverse(a.parts()[i]));
    return Element::tuple(std::move(parts));
  }

  std::string describe() const override {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << factors_[i]->describe();
    return os.str();
  }

 private:
  void check(const Element& a) const {
    if (a.kind() != Element::Kind::Tuple || a.parts().size() != factors_.size())
      fail(ErrorCode::MixedGroupOperands, "element " + a.to_string() + " is not a " +
                                              std::to_string(factors_.size()) + "-tuple");
  }

  std::vector<ArithmeticPtr> factors_;
};

}  // namespace

ArithmeticPtr permutation_arithmetic(std::size_t degree) {
  return std::make_shared<PermArithmetic>(degree);
}

ArithmeticPtr semidirect_arithmetic(ArithmeticPtr target, ArithmeticPtr actor,
                                    std::shared_ptr<const GroupAction> action) {
  return std::make_shared<SemidirectArithmetic>(std::move(target), std::move(actor), std::move(action));
}

ArithmeticPtr product_arithmetic(std::vector<ArithmeticPtr> factors) {
  return std::make_shared<ProductArithmetic>(std::move(factors));
}

}  // namespace geoforge
