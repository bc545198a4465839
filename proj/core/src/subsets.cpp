#include "permpoly/subsets.hpp"

#include <algorithm>

namespace permpoly {

std::string to_string(ViewKind kind) {
    switch (kind) {
        case ViewKind::Mu: return "mu";
        case ViewKind::OmegaPlus: return "omega-plus";
        case ViewKind::OmegaMinus: return "omega-minus";
        case ViewKind::OmegaSq: return "omega-sq";
        case ViewKind::Omega2Sq: return "omega-2sq";
        case ViewKind::FullStar: return "full-star";
    }
    return "unknown";
}

ViewPtr SubgroupView::make(FieldCtxPtr ctx, ViewKind kind,
                           std::vector<std::uint64_t> elements, std::uint64_t q_param) {
    auto view = std::shared_ptr<SubgroupView>(new SubgroupView());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    view->member_.assign(ctx->order(), false);
    for (const std::uint64_t e : elements) {
        if (e >= ctx->order()) throw FieldError("view element out of range");
        view->member_[e] = true;
    }
    view->ctx_ = std::move(ctx);
    view->kind_ = kind;
    view->q_param_ = q_param;
    view->elements_ = std::move(elements);
    return view;
}

ViewPtr mu_view(const FieldCtxPtr& ctx, std::uint64_t q) {
    if (q < 2 || ctx->order() != q * q)
        throw FieldError("mu view requires a field of order q^2");
    const std::uint64_t step = ctx->pow(ctx->generator(), q - 1);
    std::vector<std::uint64_t> elems;
    elems.reserve(q + 1);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i <= q; ++i) {
        elems.push_back(cur);
        cur = ctx->mul(cur, step);
    }
    if (cur != 1) throw FieldError("mu generation did not close");
    for (const std::uint64_t x : elems)
        if (ctx->pow(x, q + 1) != 1) throw FieldError("mu element fails x^{q+1} = 1");
    return SubgroupView::make(ctx, ViewKind::Mu, std::move(elems), q);
}

OmegaSplit omega_split(const ViewPtr& mu) {
    if (mu->kind() != ViewKind::Mu) throw FieldError("omega split needs a mu view");
    const FieldCtx& f = mu->ctx();
    std::vector<std::uint64_t> plus, minus;
    plus.reserve(mu->size());
    minus.reserve(mu->size());
    for (const std::uint64_t x : mu->elements()) {
        const std::uint64_t sq = f.mul(x, x);
        plus.push_back(sq);
        minus.push_back(f.neg(sq));
    }
    auto pv = SubgroupView::make(mu->ctx_ptr(), ViewKind::OmegaPlus, std::move(plus),
                                 mu->q_param());
    auto mv = SubgroupView::make(mu->ctx_ptr(), ViewKind::OmegaMinus, std::move(minus),
                                 mu->q_param());

    OmegaSplit split;
    split.disjoint = true;
    for (const std::uint64_t x : pv->elements())
        if (mv->contains(x)) {
            split.disjoint = false;
            break;
        }
    std::uint64_t covered = 0;
    split.covers = true;
    for (const std::uint64_t x : mu->elements()) {
        if (pv->contains(x) || mv->contains(x))
            ++covered;
        else
            split.covers = false;
    }
    split.covers = split.covers && covered == mu->size();
    const std::uint64_t half = (mu->q_param() + 1) / 2;
    split.half_sizes = pv->size() == half && mv->size() == half;
    split.plus = std::move(pv);
    split.minus = std::move(mv);
    return split;
}

SquareClassSplit square_class_split(const FieldCtxPtr& ctx) {
    if (ctx->characteristic() != 5)
        throw FieldError("square-class split is defined over characteristic 5");
    if (ctx->is_square(2))
        throw FieldError("square-class split needs 2 to be a non-square (odd extension degree)");
    std::vector<std::uint64_t> squares, twice;
    squares.reserve(ctx->order() / 2);
    twice.reserve(ctx->order() / 2);
    for (std::uint64_t x = 1; x < ctx->order(); ++x) {
        const std::uint64_t sq = ctx->mul(x, x);
        squares.push_back(sq);
        twice.push_back(ctx->mul(2, sq));
    }
    auto sv = SubgroupView::make(ctx, ViewKind::OmegaSq, std::move(squares));
    auto tv = SubgroupView::make(ctx, ViewKind::Omega2Sq, std::move(twice));
    // 2 being a non-square makes this a genuine partition of F^*; verify cheaply.
    if (sv->size() + tv->size() != ctx->order() - 1)
        throw FieldError("square classes do not partition F^*");
    for (const std::uint64_t x : sv->elements())
        if (tv->contains(x)) throw FieldError("square classes overlap");
    return SquareClassSplit{std::move(sv), std::move(tv)};
}

ViewPtr full_star_view(const FieldCtxPtr& ctx) {
    std::vector<std::uint64_t> elems;
    elems.reserve(ctx->order() - 1);
    for (std::uint64_t x = 1; x < ctx->order(); ++x) elems.push_back(x);
    return SubgroupView::make(ctx, ViewKind::FullStar, std::move(elems));
}

std::uint64_t count_sum_product_pairs(const SubgroupView& s, std::uint64_t sum,
                                      std::uint64_t product) {
    const FieldCtx& f = s.ctx();
    const auto& elems = s.elements();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            if (f.add(elems[i], elems[j]) == sum && f.mul(elems[i], elems[j]) == product)
                ++count;
        }
    }
    return count;
}

}  // namespace permpoly
