#include "relaysched/rational.hpp"

#include "relaysched/errors.hpp"

namespace relaysched {

std::string fraction_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_fraction(const std::string& text) {
    auto bad = [&] { return input_error("not a fraction: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Int p(text);
            return Rat(p);
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        Rat q{Int(num), Int(den)};
        if (q.get_den() == 0) throw bad();
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

} // namespace relaysched
