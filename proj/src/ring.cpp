#include "bellrec/ring.hpp"

namespace bellrec {

std::string to_string(Domain d)
{
    switch (d) {
    case Domain::integer: return "integer";
    case Domain::rational: return "rational";
    case Domain::polynomial: return "polynomial";
    }
    return "unknown";
}

Domain domain_of(const RingElem& v) { return static_cast<Domain>(v.index()); }

RingElem promote(const RingElem& v, Domain to)
{
    const Domain from = domain_of(v);
    if (from == to) {
        return v;
    }
    if (static_cast<int>(to) < static_cast<int>(from)) {
        throw std::invalid_argument("cannot demote " + to_string(from) + " to " + to_string(to));
    }
    Rational q = std::holds_alternative<Integer>(v) ? Rational(std::get<Integer>(v))
                                                    : std::get<Rational>(v);
    if (to == Domain::rational) {
        return q;
    }
    return Poly(q);
}

Domain common_domain(const std::vector<RingElem>& values)
{
    Domain widest = Domain::integer;
    for (const auto& v : values) {
        if (static_cast<int>(domain_of(v)) > static_cast<int>(widest)) {
            widest = domain_of(v);
        }
    }
    return widest;
}

namespace {

template <class Op>
RingElem same_domain(const RingElem& a, const RingElem& b, Op op)
{
    if (a.index() != b.index()) {
        throw DomainMismatch("mixed ring domains: " + to_string(domain_of(a)) + " and " +
                             to_string(domain_of(b)));
    }
    return std::visit(
        [&](const auto& lhs) -> RingElem {
            using T = std::decay_t<decltype(lhs)>;
            return T(op(lhs, std::get<T>(b)));
        },
        a);
}

}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b)
{
    return same_domain(a, b, [](const auto& x, const auto& y) { return x + y; });
}

RingElem operator-(const RingElem& a, const RingElem& b)
{
    return same_domain(a, b, [](const auto& x, const auto& y) { return x - y; });
}

RingElem operator*(const RingElem& a, const RingElem& b)
{
    return same_domain(a, b, [](const auto& x, const auto& y) { return x * y; });
}

std::string to_string(const RingElem& v)
{
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

RingElem parse_ring_elem(std::string_view text)
{
    Rational q = parse_rational(text);
    if (text.find('/') == std::string_view::npos) {
        return q.get_num();
    }
    return q;
}

}  // namespace bellrec
