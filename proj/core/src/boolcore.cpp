#include "bdsa/boolcore.hpp"

#include <cctype>
#include <cstdlib>

namespace bdsa {

AtomUniverse::AtomUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<size_t>(kHardAtomCap))
        throw Error(ErrorKind::TooLarge,
                    "more than " + std::to_string(kHardAtomCap) + " atoms");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!valid_identifier(names_[i]))
            throw Error(ErrorKind::MalformedSyntax, "invalid atom name '" + names_[i] + "'");
        for (size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw Error(ErrorKind::MalformedSyntax, "duplicate atom '" + names_[i] + "'");
    }
    full_ = names_.empty() ? Element{} : Element{(uint32_t{1} << names_.size()) - 1};
}

int AtomUniverse::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool valid_identifier(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

int soft_atom_cap() {
    int cap = 12;
    if (const char* env = std::getenv("BDSA_MAX_ATOMS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) cap = static_cast<int>(v);
    }
    return cap < kHardAtomCap ? cap : kHardAtomCap;
}

void require_enumerable(const AtomUniverse& universe) {
    if (universe.size() > soft_atom_cap())
        throw Error(ErrorKind::TooLarge,
                    std::to_string(universe.size()) +
                        " atoms exceeds the enumeration cap (set BDSA_MAX_ATOMS to raise it)");
}

Element quotient_map(const QuotientContext& ctx, Element a) { return a - ctx.removed; }

Action dualize_action(const AtomUniverse& universe, const std::vector<Element>& images) {
    const int n = universe.size();
    Action action;
    action.images = images;
    action.dual.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!images[a].test(b)) continue;
            if (action.dual[b] != -1)
                throw Error(ErrorKind::NotDisjoint,
                            "atom '" + universe.name(b) + "' lies in the images of '" +
                                universe.name(action.dual[b]) + "' and '" + universe.name(a) + "'");
            action.dual[b] = a;
        }
    }
    return action;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

}  // namespace

Element parse_element(const AtomUniverse& universe, const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && is_space(text[i])) ++i; };

    skip_ws();
    if (i >= text.size() || text[i] != '{')
        throw Error(ErrorKind::MalformedSyntax, "expected '{'", -1, static_cast<int>(i + 1));
    ++i;

    Element out;
    bool expect_atom_or_close = true;
    while (true) {
        skip_ws();
        if (i >= text.size())
            throw Error(ErrorKind::MalformedSyntax, "unterminated element literal", -1,
                        static_cast<int>(i + 1));
        if (text[i] == '}') {
            if (!expect_atom_or_close)
                throw Error(ErrorKind::MalformedSyntax, "trailing ',' before '}'", -1,
                            static_cast<int>(i + 1));
            ++i;
            break;
        }
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == start)
            throw Error(ErrorKind::MalformedSyntax,
                        std::string("unexpected character '") + text[i] + "'", -1,
                        static_cast<int>(i + 1));
        std::string name = text.substr(start, i - start);
        int idx = universe.index_of(name);
        if (idx < 0)
            throw Error(ErrorKind::UnknownAtom, name, -1, static_cast<int>(start + 1));
        out |= Element::atom(idx);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            expect_atom_or_close = false;
        } else {
            expect_atom_or_close = true;
        }
    }
    skip_ws();
    if (i != text.size())
        throw Error(ErrorKind::MalformedSyntax, "trailing text after '}'", -1,
                    static_cast<int>(i + 1));
    return out;
}

std::string render_element(const AtomUniverse& universe, Element e) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < universe.size(); ++i) {
        if (!e.test(i)) continue;
        if (!first) out += ',';
        out += universe.name(i);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace bdsa
