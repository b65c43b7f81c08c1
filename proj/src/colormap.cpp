#include "hyperdyn/render.hpp"

namespace hyperdyn {

// Escape-count palette: navy, blue, near-white, amber, brick red. Piecewise
// linear through five stops at 0, 1/4, 1/2, 3/4, 1, rounded to bytes. No
// entry is pure black, which is reserved for bounded pixels. Pinned by a
// golden test; do not edit without updating it.
const Colormap& default_colormap() {
  static const Colormap table = {{
    Rgb{0, 7, 100}, Rgb{1, 9, 102}, Rgb{1, 10, 103}, Rgb{2, 12, 105},
    Rgb{2, 13, 106}, Rgb{3, 15, 108}, Rgb{3, 16, 110}, Rgb{4, 18, 111},
    Rgb{4, 20, 113}, Rgb{5, 21, 115}, Rgb{5, 23, 116}, Rgb{6, 24, 118},
    Rgb{6, 26, 119}, Rgb{7, 27, 121}, Rgb{7, 29, 123}, Rgb{8, 31, 124},
    Rgb{8, 32, 126}, Rgb{9, 34, 127}, Rgb{9, 35, 129}, Rgb{10, 37, 131},
    Rgb{10, 38, 132}, Rgb{11, 40, 134}, Rgb{11, 42, 136}, Rgb{12, 43, 137},
    Rgb{12, 45, 139}, Rgb{13, 46, 140}, Rgb{13, 48, 142}, Rgb{14, 49, 144},
    Rgb{14, 51, 145}, Rgb{15, 52, 147}, Rgb{15, 54, 148}, Rgb{16, 56, 150},
    Rgb{16, 57, 152}, Rgb{17, 59, 153}, Rgb{17, 60, 155}, Rgb{18, 62, 157},
    Rgb{18, 63, 158}, Rgb{19, 65, 160}, Rgb{19, 67, 161}, Rgb{20, 68, 163},
    Rgb{20, 70, 165}, Rgb{21, 71, 166}, Rgb{21, 73, 168}, Rgb{22, 74, 169},
    Rgb{22, 76, 171}, Rgb{23, 78, 173}, Rgb{23, 79, 174}, Rgb{24, 81, 176},
    Rgb{24, 82, 178}, Rgb{25, 84, 179}, Rgb{25, 85, 181}, Rgb{26, 87, 182},
    Rgb{26, 89, 184}, Rgb{27, 90, 186}, Rgb{27, 92, 187}, Rgb{28, 93, 189},
    Rgb{28, 95, 190}, Rgb{29, 96, 192}, Rgb{29, 98, 194}, Rgb{30, 100, 195},
    Rgb{30, 101, 197}, Rgb{31, 103, 199}, Rgb{31, 104, 200}, Rgb{32, 106, 202},
    Rgb{33, 108, 203}, Rgb{36, 110, 204}, Rgb{39, 112, 205}, Rgb{42, 115, 206},
    Rgb{46, 117, 206}, Rgb{49, 119, 207}, Rgb{52, 122, 208}, Rgb{55, 124, 209},
    Rgb{59, 126, 210}, Rgb{62, 128, 211}, Rgb{65, 131, 211}, Rgb{68, 133, 212},
    Rgb{71, 135, 213}, Rgb{75, 138, 214}, Rgb{78, 140, 215}, Rgb{81, 142, 215},
    Rgb{84, 145, 216}, Rgb{87, 147, 217}, Rgb{91, 149, 218}, Rgb{94, 152, 219},
    Rgb{97, 154, 220}, Rgb{100, 156, 220}, Rgb{104, 159, 221}, Rgb{107, 161, 222},
    Rgb{110, 163, 223}, Rgb{113, 166, 224}, Rgb{116, 168, 224}, Rgb{120, 170, 225},
    Rgb{123, 173, 226}, Rgb{126, 175, 227}, Rgb{129, 177, 228}, Rgb{132, 180, 228},
    Rgb{136, 182, 229}, Rgb{139, 184, 230}, Rgb{142, 187, 231}, Rgb{145, 189, 232},
    Rgb{149, 191, 233}, Rgb{152, 193, 233}, Rgb{155, 196, 234}, Rgb{158, 198, 235},
    Rgb{161, 200, 236}, Rgb{165, 203, 237}, Rgb{168, 205, 237}, Rgb{171, 207, 238},
    Rgb{174, 210, 239}, Rgb{178, 212, 240}, Rgb{181, 214, 241}, Rgb{184, 217, 242},
    Rgb{187, 219, 242}, Rgb{190, 221, 243}, Rgb{194, 224, 244}, Rgb{197, 226, 245},
    Rgb{200, 228, 246}, Rgb{203, 231, 246}, Rgb{206, 233, 247}, Rgb{210, 235, 248},
    Rgb{213, 238, 249}, Rgb{216, 240, 250}, Rgb{219, 242, 251}, Rgb{223, 245, 251},
    Rgb{226, 247, 252}, Rgb{229, 249, 253}, Rgb{232, 252, 254}, Rgb{235, 254, 255},
    Rgb{237, 254, 253}, Rgb{237, 253, 249}, Rgb{238, 252, 245}, Rgb{238, 250, 241},
    Rgb{238, 249, 237}, Rgb{239, 248, 233}, Rgb{239, 246, 229}, Rgb{239, 245, 225},
    Rgb{239, 244, 221}, Rgb{240, 242, 217}, Rgb{240, 241, 213}, Rgb{240, 240, 209},
    Rgb{241, 238, 205}, Rgb{241, 237, 201}, Rgb{241, 236, 197}, Rgb{241, 234, 193},
    Rgb{242, 233, 189}, Rgb{242, 232, 185}, Rgb{242, 230, 181}, Rgb{243, 229, 177},
    Rgb{243, 228, 173}, Rgb{243, 226, 169}, Rgb{243, 225, 165}, Rgb{244, 224, 161},
    Rgb{244, 222, 157}, Rgb{244, 221, 153}, Rgb{244, 220, 149}, Rgb{245, 218, 145},
    Rgb{245, 217, 141}, Rgb{245, 216, 137}, Rgb{246, 214, 133}, Rgb{246, 213, 129},
    Rgb{246, 212, 125}, Rgb{246, 210, 121}, Rgb{247, 209, 117}, Rgb{247, 208, 113},
    Rgb{247, 206, 109}, Rgb{248, 205, 105}, Rgb{248, 204, 101}, Rgb{248, 202, 97},
    Rgb{248, 201, 93}, Rgb{249, 200, 89}, Rgb{249, 198, 85}, Rgb{249, 197, 81},
    Rgb{250, 196, 77}, Rgb{250, 194, 73}, Rgb{250, 193, 69}, Rgb{250, 192, 65},
    Rgb{251, 190, 61}, Rgb{251, 189, 57}, Rgb{251, 188, 53}, Rgb{252, 186, 49},
    Rgb{252, 185, 45}, Rgb{252, 184, 41}, Rgb{252, 182, 37}, Rgb{253, 181, 33},
    Rgb{253, 180, 29}, Rgb{253, 178, 25}, Rgb{254, 177, 21}, Rgb{254, 176, 17},
    Rgb{254, 174, 13}, Rgb{254, 173, 9}, Rgb{255, 172, 5}, Rgb{255, 170, 1},
    Rgb{254, 168, 0}, Rgb{253, 166, 0}, Rgb{252, 164, 0}, Rgb{251, 162, 1},
    Rgb{249, 160, 1}, Rgb{248, 157, 1}, Rgb{247, 155, 1}, Rgb{246, 153, 1},
    Rgb{245, 151, 1}, Rgb{244, 149, 2}, Rgb{242, 146, 2}, Rgb{241, 144, 2},
    Rgb{240, 142, 2}, Rgb{239, 140, 2}, Rgb{238, 138, 2}, Rgb{236, 135, 2},
    Rgb{235, 133, 3}, Rgb{234, 131, 3}, Rgb{233, 129, 3}, Rgb{232, 127, 3},
    Rgb{231, 124, 3}, Rgb{229, 122, 3}, Rgb{228, 120, 4}, Rgb{227, 118, 4},
    Rgb{226, 116, 4}, Rgb{225, 113, 4}, Rgb{224, 111, 4}, Rgb{222, 109, 4},
    Rgb{221, 107, 5}, Rgb{220, 105, 5}, Rgb{219, 102, 5}, Rgb{218, 100, 5},
    Rgb{216, 98, 5}, Rgb{215, 96, 5}, Rgb{214, 94, 5}, Rgb{213, 91, 6},
    Rgb{212, 89, 6}, Rgb{211, 87, 6}, Rgb{209, 85, 6}, Rgb{208, 83, 6},
    Rgb{207, 81, 6}, Rgb{206, 78, 7}, Rgb{205, 76, 7}, Rgb{204, 74, 7},
    Rgb{202, 72, 7}, Rgb{201, 70, 7}, Rgb{200, 67, 7}, Rgb{199, 65, 7},
    Rgb{198, 63, 8}, Rgb{196, 61, 8}, Rgb{195, 59, 8}, Rgb{194, 56, 8},
    Rgb{193, 54, 8}, Rgb{192, 52, 8}, Rgb{191, 50, 9}, Rgb{189, 48, 9},
    Rgb{188, 45, 9}, Rgb{187, 43, 9}, Rgb{186, 41, 9}, Rgb{185, 39, 9},
    Rgb{184, 37, 10}, Rgb{182, 34, 10}, Rgb{181, 32, 10}, Rgb{180, 30, 10},
  }};
  return table;
}

std::size_t colormap_index(std::uint32_t n, std::uint32_t depth) {
  return static_cast<std::size_t>((255ull * n) / depth);
}

}  // namespace hyperdyn
