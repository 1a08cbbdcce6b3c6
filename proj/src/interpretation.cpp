#include "modsem/interpretation.hpp"

#include "modsem/errors.hpp"

namespace modsem {

PartialInterpretation::PartialInterpretation(SignedSet literals) : literals_(std::move(literals)) {
    if (literals_.pos.size() != literals_.neg.size())
        throw DomainError("literal set halves cover different universes");
    if (!literals_.consistent()) throw UndefinedBound("inconsistent literal set");
}

void InclusionOrder::check(const AtomSet& x) const {
    if (x.size() != atoms_) throw DomainError("atom set over a different universe");
}

bool InclusionOrder::leq(const AtomSet& x, const AtomSet& y) const {
    check(x);
    check(y);
    return x.is_subset_of(y);
}

AtomSet InclusionOrder::join(const AtomSet& x, const AtomSet& y) const {
    check(x);
    check(y);
    return x | y;
}

AtomSet InclusionOrder::meet(const AtomSet& x, const AtomSet& y) const {
    check(x);
    check(y);
    return x & y;
}

void LiteralPoset::check(const PartialInterpretation& x) const {
    if (x.universe_size() != atoms_) throw DomainError("literal set over a different universe");
}

bool LiteralPoset::leq(const PartialInterpretation& x, const PartialInterpretation& y) const {
    check(x);
    check(y);
    return x.literals().subset_of(y.literals());
}

std::optional<PartialInterpretation> LiteralPoset::try_join(const PartialInterpretation& x,
                                                            const PartialInterpretation& y) const {
    check(x);
    check(y);
    SignedSet u = x.literals().united(y.literals());
    if (!u.consistent()) return std::nullopt;
    return PartialInterpretation(std::move(u));
}

PartialInterpretation LiteralPoset::join(const PartialInterpretation& x, const PartialInterpretation& y) const {
    if (auto j = try_join(x, y)) return *std::move(j);
    throw UndefinedBound("inconsistent union of partial interpretations");
}

PartialInterpretation LiteralPoset::meet(const PartialInterpretation& x, const PartialInterpretation& y) const {
    check(x);
    check(y);
    return PartialInterpretation(SignedSet(x.literals().pos & y.literals().pos, x.literals().neg & y.literals().neg));
}

} // namespace modsem
