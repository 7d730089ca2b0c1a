#include "bdsa/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace bdsa {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    InstanceData data;
    bool have_atoms = false;
    bool have_labels = false;
    AtomUniverse universe;

    std::vector<std::vector<bool>> act_seen;
    std::vector<bool> ideal_seen;
    bool j_seen = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        std::string keyword = split_ws(line).front();
        if (keyword == "atoms") {
            if (have_atoms) throw Error(ErrorKind::MalformedSyntax, "duplicate atoms line", line_no);
            auto toks = split_ws(line);
            data.atoms.assign(toks.begin() + 1, toks.end());
            try {
                universe = AtomUniverse(data.atoms);
            } catch (const Error& e) {
                throw Error(e.kind(), e.detail(), line_no);
            }
            have_atoms = true;
            continue;
        }
        if (keyword == "labels") {
            if (have_labels)
                throw Error(ErrorKind::MalformedSyntax, "duplicate labels line", line_no);
            auto toks = split_ws(line);
            data.labels.assign(toks.begin() + 1, toks.end());
            have_labels = true;
            data.images.assign(data.labels.size(), {});
            data.ideal_tops.assign(data.labels.size(), std::nullopt);
            act_seen.assign(data.labels.size(), {});
            ideal_seen.assign(data.labels.size(), false);
            continue;
        }

        if (!have_atoms || !have_labels)
            throw Error(ErrorKind::MalformedSyntax,
                        "'" + keyword + "' before the atoms and labels lines", line_no);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::MalformedSyntax, "expected '='", line_no);
        std::string head = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        auto head_toks = split_ws(head);

        Element parsed;
        try {
            parsed = parse_element(universe, value);
        } catch (const Error& e) {
            throw Error(e.kind(), e.detail(), line_no);
        }

        if (head_toks.size() == 3 && head_toks[0] == "act") {
            int l = -1;
            for (size_t i = 0; i < data.labels.size(); ++i)
                if (data.labels[i] == head_toks[1]) l = static_cast<int>(i);
            if (l < 0) throw Error(ErrorKind::UnknownLabel, head_toks[1], line_no);
            int a = universe.index_of(head_toks[2]);
            if (a < 0) throw Error(ErrorKind::UnknownAtom, head_toks[2], line_no);
            data.images[l].resize(universe.size());
            act_seen[l].resize(universe.size(), false);
            if (act_seen[l][a])
                throw Error(ErrorKind::MalformedSyntax,
                            "duplicate act line for (" + head_toks[1] + ", " + head_toks[2] + ")",
                            line_no);
            act_seen[l][a] = true;
            data.images[l][a] = parsed;
            continue;
        }
        if (head_toks.size() == 2 && head_toks[0] == "ideal") {
            int l = -1;
            for (size_t i = 0; i < data.labels.size(); ++i)
                if (data.labels[i] == head_toks[1]) l = static_cast<int>(i);
            if (l < 0) throw Error(ErrorKind::UnknownLabel, head_toks[1], line_no);
            if (ideal_seen[l])
                throw Error(ErrorKind::MalformedSyntax,
                            "duplicate ideal line for '" + head_toks[1] + "'", line_no);
            ideal_seen[l] = true;
            data.ideal_tops[l] = parsed;
            continue;
        }
        if (head_toks.size() == 1 && head_toks[0] == "J") {
            if (j_seen) throw Error(ErrorKind::MalformedSyntax, "duplicate J line", line_no);
            j_seen = true;
            data.j_top = parsed;
            continue;
        }
        throw Error(ErrorKind::MalformedSyntax, "unrecognized line '" + keyword + "...'", line_no);
    }

    if (!have_atoms) throw Error(ErrorKind::MalformedSyntax, "missing atoms line");
    if (!have_labels) throw Error(ErrorKind::MalformedSyntax, "missing labels line");
    return Instance::build(std::move(data));
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedSyntax, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string render_instance(const Instance& inst) {
    const AtomUniverse& u = inst.universe();
    std::string out = "atoms";
    for (const auto& a : u.names()) out += ' ' + a;
    out += "\nlabels";
    for (const auto& l : inst.labels()) out += ' ' + l;
    out += '\n';
    for (int l = 0; l < inst.label_count(); ++l)
        for (int a = 0; a < inst.atom_count(); ++a) {
            Element img = inst.action(l).images[a];
            if (!img.empty())
                out += "act " + inst.label(l) + ' ' + u.name(a) + " = " + render_element(u, img) + '\n';
        }
    for (int l = 0; l < inst.label_count(); ++l)
        if (inst.ideal_top(l) != inst.range_top(l))
            out += "ideal " + inst.label(l) + " = " + render_element(u, inst.ideal_top(l)) + '\n';
    if (inst.j_top() != inst.regular_top())
        out += "J = " + render_element(u, inst.j_top()) + '\n';
    return out;
}

}  // namespace bdsa
