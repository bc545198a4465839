#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

/// The structured subsets the bijection proofs work on.
enum class ViewKind {
    Mu,          // mu_{q+1} = {x in F_{q^2} : x^{q+1} = 1}
    OmegaPlus,   // {x^2  : x in mu_{q+1}}
    OmegaMinus,  // {-x^2 : x in mu_{q+1}}
    OmegaSq,     // {x^2  : x in F^*}
    Omega2Sq,    // {2x^2 : x in F^*}
    FullStar,    // F^* itself
};

std::string to_string(ViewKind kind);

/**
 * An enumerable subset of a field with O(1) membership. Element indices are
 * kept sorted ascending so iteration order is deterministic across runs.
 * Immutable after construction; shareable across threads.
 */
class SubgroupView {
public:
    static std::shared_ptr<const SubgroupView> make(FieldCtxPtr ctx, ViewKind kind,
                                                    std::vector<std::uint64_t> elements,
                                                    std::uint64_t q_param = 0);

    const FieldCtx& ctx() const { return *ctx_; }
    const FieldCtxPtr& ctx_ptr() const { return ctx_; }
    ViewKind kind() const { return kind_; }
    /// The designated q for mu-type views (0 when not applicable).
    std::uint64_t q_param() const { return q_param_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    bool contains(std::uint64_t index) const {
        return index < member_.size() && member_[index];
    }

private:
    SubgroupView() = default;
    FieldCtxPtr ctx_;
    ViewKind kind_ = ViewKind::FullStar;
    std::uint64_t q_param_ = 0;
    std::vector<std::uint64_t> elements_;
    std::vector<bool> member_;
};

using ViewPtr = std::shared_ptr<const SubgroupView>;

/// mu_{q+1} inside F_{q^2}: the q+1 elements with x^{q+1} = 1, generated as
/// powers of generator^{q-1}. Requires the field order to equal q^2.
ViewPtr mu_view(const FieldCtxPtr& ctx, std::uint64_t q);

/// Result of splitting mu_{q+1} into squares and negated squares. The
/// partition facts are computed, not assumed; for q = 5^k they always hold.
struct OmegaSplit {
    ViewPtr plus;       // {x^2 : x in mu}
    ViewPtr minus;      // {-x^2 : x in mu}
    bool disjoint;      // plus and minus share no element
    bool covers;        // plus union minus == mu
    bool half_sizes;    // |plus| == |minus| == (q+1)/2
};

OmegaSplit omega_split(const ViewPtr& mu);

/// Squares and twice-squares of F^*. Requires characteristic 5 and 2 a
/// non-square (k odd); otherwise the two sets coincide and this throws.
struct SquareClassSplit {
    ViewPtr squares;        // {x^2 : x in F^*}
    ViewPtr twice_squares;  // {2x^2 : x in F^*}
};

SquareClassSplit square_class_split(const FieldCtxPtr& ctx);

ViewPtr full_star_view(const FieldCtxPtr& ctx);

/// Number of unordered pairs {x, y} in S (x = y allowed) with x + y = sum and
/// x * y = product — the "two roots of u^2 - su + p" count.
std::uint64_t count_sum_product_pairs(const SubgroupView& s, std::uint64_t sum,
                                      std::uint64_t product);

/**
 * Evaluation domain for bijection checks: either a whole field or one of its
 * subgroup views. at(i) enumerates elements in ascending index order.
 */
struct EvalDomain {
    FieldCtxPtr ctx;
    ViewPtr view;  // null means the whole field

    static EvalDomain whole_field(FieldCtxPtr c) { return EvalDomain{std::move(c), nullptr}; }
    static EvalDomain of_view(ViewPtr v) {
        EvalDomain d;
        d.ctx = v->ctx_ptr();
        d.view = std::move(v);
        return d;
    }

    std::uint64_t size() const { return view ? view->size() : ctx->order(); }
    std::uint64_t at(std::uint64_t i) const { return view ? view->elements()[i] : i; }
    bool contains(std::uint64_t index) const {
        return view ? view->contains(index) : index < ctx->order();
    }
};

}  // namespace permpoly
