#include "blockinv/presets.hpp"

namespace blockinv {

BlockDesign ottaviani15() {
    return parse_block_list(
        "1,3,2,0,4; 6,0,5,8,7; 9,10,13,11,12; 14,9,10,1,5; 1,3,2,6,11; "
        "12,4,5,8,7; 14,9,13,2,7; 14,10,13,3,8; 6,11,0,12,4");
}

BlockDesign ottaviani15_alt() {
    return parse_block_list(
        "0,1,2,3,4; 0,5,6,7,8; 9,10,11,12,13; 1,5,9,10,14; 1,2,3,6,11; "
        "4,5,7,8,12; 2,7,9,13,14; 3,8,10,13,14; 0,4,6,11,12");
}

BlockDesign aronhold() { return parse_symbolic("(abc)(abd)(acd)(bcd)"); }

BlockDesign clebsch542() {
    return parse_symbolic("(abc)^2(ade)(adf)(bdf)(bef)(cde)(cef)");
}

BlockDesign design943() {
    return parse_symbolic(
        "(abcd)(abgj)(aefg)(afhi)(bdef)(behi)(cdgh)(ceij)(cfhj)(dgij)");
}

BlockDesign quadric(int n) {
    if (n < 1 || n > 25) throw ValidationError("quadric:<n> needs 1 <= n <= 25");
    std::vector<int> all(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) all[static_cast<std::size_t>(i)] = i;
    return BlockDesign({all, all});
}

BlockDesign catalecticant(int k) {
    if (k < 1) throw ValidationError("catalecticant:<k> needs k >= 1");
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            blocks.push_back({i, j});
            blocks.push_back({i, j});
        }
    return BlockDesign(std::move(blocks), k + 1);
}

FormSet paper8_forms() {
    return FormSet::from_ints({{1, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0},
                               {0, 0, 1, 0, 0},
                               {0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 1},
                               {1, 1, 1, 1, 1},
                               {1, 2, 3, 2, 1},
                               {1, 2, 1, 1, 2}});
}

namespace {

std::optional<int> parse_parameter(const std::string& name,
                                   const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.size() > 3) return std::nullopt;
    for (char ch : tail)
        if (ch < '0' || ch > '9') return std::nullopt;
    return std::stoi(tail);
}

}  // namespace

std::optional<BlockDesign> find_design_preset(const std::string& name) {
    if (name == "ottaviani15") return ottaviani15();
    if (name == "ottaviani15-alt") return ottaviani15_alt();
    if (name == "aronhold") return aronhold();
    if (name == "clebsch542") return clebsch542();
    if (name == "design943") return design943();
    if (auto n = parse_parameter(name, "quadric:")) return quadric(*n);
    if (auto k = parse_parameter(name, "catalecticant:"))
        return catalecticant(*k);
    return std::nullopt;
}

std::optional<FormSet> find_form_preset(const std::string& name) {
    if (name == "paper8") return paper8_forms();
    return std::nullopt;
}

std::vector<std::string> design_preset_names() {
    return {"ottaviani15", "ottaviani15-alt", "aronhold",
            "clebsch542", "design943",       "quadric:<n>",
            "catalecticant:<k>"};
}

}  // namespace blockinv
