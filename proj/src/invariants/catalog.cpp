#include "f4v/invariants/catalog.hpp"

#include <map>

#include "f4v/exactalg/parse.hpp"
#include "f4v/reps/basis.hpp"

namespace f4v {

namespace {

const char* const kDisc4 =
    "B^2C^2D^2 - 4AC^3D^2 - 4B^3D^3 + 18ABCD^3 - 27 A^2 D^4 - 4 B^2 C^3 E + 16 A C^4 E"
    " + 18 B^3 C D E - 80 ABC^2 DE - 6 AB^2 D^2 E + 144 A^2 C D^2 E - 27 B^4 E^2"
    " + 144 AB^2 CE^2 - 128 A^2 C^2 E^2 - 192 A^2 B D E^2 + 256 A^3 E^3";

const char* const kDisc2 = "4ABC + DEF - AF^2 - BE^2 - CD^2";

const char* const kS =
    "E^4 - 8 DE^2 F + 16 D^2 F^2 + 24 CE F G - 48 B F^2 G - 8 CE^2 H - 16 CD F H"
    " + 24 B EF H + 16 C^2 H^2 - 48 A F H^2 + 24 CDEI - 8 B E^2 I - 16 B D F I"
    " - 48 C^2 G I + 144 A F G I - 16 B C H I + 24 A E H I + 16 B^2 I^2 - 48 A DI^2"
    " - 48 CD^2 J + 24 B DEJ + 144 B C G J - 216 A E G J - 48 B^2 H J + 144 A DH J";

// Two letters are case-corrected relative to the printed source: "i" in the
// C D E^3 I term and "d" in the B C D F G J term.
const char* const kT =
    "-E^6 + 12 D E^4 F - 48 D^2 E^2 F^2 + 64 D^3 F^3 - 36 C E^3 F G + 144 C D E F^2 G"
    " + 72 B E^2 F^2 G - 288 B D F^3 G - 216 C^2 F^2 G^2 + 864 A F^3 G^2 + 12 C E^4 H"
    " - 24 C D E^2 F H - 36 B E^3 F H - 96 CD^2 F^2 H + 144 B D E F^2 H + 144 C^2 E F G H"
    " + 144 B CF^2 G H - 864 A E F^2 G H - 48 C^2 E^2 H^2 - 96 C^2 D F H^2 + 144 B C E F H^2"
    " + 72 A E^2 F H^2 - 216 B^2 F^2 H^2 + 576 A D F^2 H^2 + 64 C^3 H^3 - 288 A C F H^3"
    " - 36 C D E^3 I + 12 B E^4 I + 144 C D^2 E F I - 24 B D E^2 F I - 96 B D^2 F^2 I"
    " + 72 C^2 E^2 G I + 144 C^2 D F G I - 720 B C E F G I + 648 A E^2 F G I + 576 B^2 F^2 G I"
    " - 864 A D F^2 G I + 144 C^2 D E H I - 24 B C E^2 H I - 36 A E^3 H I - 48 B C D F H I"
    " + 144 B^2 E F H I - 720 A D E F H I - 288 C^3 G H I + 1296 A C F G H I - 96 B C^2 H^2 I"
    " + 144 A C E H^2 I + 144 A B F H^2 I - 216 C^2 D^2 I^2 + 144 B C D E I^2 - 48 B^2 E^2 I^2"
    " + 72 A D E^2 I^2 - 96 B^2 D F I^2 + 576 A D^2 F I^2 + 576 B C^2 G I^2 - 864 A C E G I^2"
    " - 864 A B F G I^2 - 96 B^2 C H I^2 + 144 A C D H I^2 + 144 A B E H I^2 - 216 A^2 H^2 I^2"
    " + 64 B^3 I^3 - 288 A B D I^3 + 864 A^2 G I^3 + 72 C D^2 E^2 J - 36 B D E^3 J"
    " - 288 C D^3 F J + 144 B D^2 E F J - 864 C^2 D E G J + 648 B C E^2 G J - 540 A E^3 G J"
    " + 1296 B C D F G J - 864 B^2 E F G J + 1296 A D E F G J + 864 C^3 G^2 J"
    " - 3888 A C F G^2 J + 576 C^2 D^2 H J - 720 B CDE H J + 72 B^2 E^2 H J"
    " + 648 A DE^2 H J + 144 B^2 D F H J - 864 A D^2 F H J - 864 B C^2 G H J"
    " + 1296 A C E G H J + 1296 A B F G H J + 576 B^2 CH^2 J - 864 A C D H^2 J"
    " - 864 A B E H^2 J + 864 A^2 H^3 J + 144 B CD^2 I J + 144 B^2 D E I J - 864 A D^2 E I J"
    " - 864 B^2 C G I J + 1296 A C D G I J + 1296 A B E G I J - 288 B^3 H I J"
    " + 1296 A B D H I J - 3888 A^2 G H I J - 216 B^2 D^2 J^2 + 864 A D^3 J^2 + 864 B^3 G J^2"
    " - 3888 A B D G J^2 + 5832 A^2 G^2 J^2";

const char* const kCoeffs3[10] = {
    "4 a d g - g j^2 - d m^2 + j m p - a p^2",
    "4 b d g + 4 a e g + 4 a d h - h j^2 - 2 g j k - e m^2 - 2 d m n + k m p + j n p - b p^2 + j m q - 2 a p q",
    "4 c d g + 4 a f g + 4 a d i - i j^2 - 2 g j l - f m^2 - 2 d m o + l m p + j o p - c p^2 + j m r - 2 a p r",
    "4 b e g + 4 b d h + 4 a e h - 2 h j k - g k^2 - 2 e m n - d n^2 + k n p + k m q + j n q - 2 b p q - a q^2",
    "4 c e g + 4 b f g + 4 c d h + 4 a f h + 4 b d i + 4 a e i - 2 i j k - 2 h j l - 2 g k l - 2 f m n - 2 e m o"
    " - 2 d n o + l n p + k o p + l m q + j o q - 2 c p q + k m r + j n r - 2 b p r - 2 a q r",
    "4 c f g + 4 c d i + 4 a f i - 2 i j l - g l^2 - 2 f m o - d o^2 + l o p + l m r + j o r - 2 c p r - a r^2",
    "4 b e h - h k^2 - e n^2 + k n q - b q^2",
    "4 c e h + 4 b f h + 4 b e i - i k^2 - 2 h k l - f n^2 - 2 e n o + l n q + k o q - c q^2 + k n r - 2 b q r",
    "4 c f h + 4 c e i + 4 b f i - 2 i k l - h l^2 - 2 f n o - e o^2 + l o q + l n r + k o r - 2 c q r - b r^2",
    "4 c f i - i l^2 - f o^2 + l o r - c r^2",
};

const char* const kCoeffs4[5] = {
    "4 a c e m - e g^2 m - a k^2 m + g i  k m- c i^2m",
    "4 b c e m + 4 a d e m + 4 a c f m - f g^2 m - 2 e g h m - b k^2 m - 2 a k l m + 4 a c e n - e g^2 n - a k^2 n"
    " + h i k m + g  il m + g ik n  - d i^2m  - ci^2 n  + g jk m  - 2 c i jm",
    "4 b d e m + 4 b c f m + 4 a d f m - 2 f g h m - e h^2 m - 2 b k l m - a l^2 m + 4 b c e n + 4 a d e n + 4 a c f n"
    " - f g^2 n - 2 e g h n - b k^2 n - 2 a k l n + h il m  + h ik n + g il n  - d i^2n  + h jk m  + g jl m"
    " + g jk n  - 2 d i jm  - 2 ci j  n - c j^2m",
    "4 b d f m - f h^2 m - b l^2 m + 4 b d e n + 4 b c f n + 4 a d f n - 2 f g h n - e h^2 n - 2 b k l n - a l^2 n"
    " + h il n  + h jl m  + h jk n  + g jl n  - 2 d i jn  - d j^2m  - cj^2 n",
    "4 b d f n - f h^2 n - b l^2 n + h jl n  - dj^2 n",
};

const char* const kBeta[6] = {
    "4adg - gj^2",
    "4bdg + 4aeg + 4adh - hj^2 - 2gjk",
    "4beg + 4bdh + 4aeh - 2hjk - gk^2",
    "4beh - hk^2",
    "-ar^2 - do^2 + ojr",
    "-br^2 - eo^2 + okr",
};

const char* const kDiscF1 = "b^2 - 4ac";
const char* const kResF1F2 = "cd^2 - bde + ae^2";

}  // namespace

FormulaCatalog build_catalog(const std::vector<std::pair<std::string, std::string>>& overrides) {
  std::vector<std::pair<std::string, std::string>> src;
  src.push_back({"disc2", kDisc2});
  src.push_back({"disc4", kDisc4});
  src.push_back({"S", kS});
  src.push_back({"T", kT});
  const char* cubic_names = "ABCDEFGHIJ";
  for (int i = 0; i < 10; ++i) src.push_back({std::string("coeffs3.") + cubic_names[i], kCoeffs3[i]});
  for (int i = 0; i < 5; ++i) src.push_back({std::string("coeffs4.") + cubic_names[i], kCoeffs4[i]});
  for (int i = 0; i < 6; ++i) src.push_back({"beta" + std::to_string(i + 1), kBeta[i]});
  src.push_back({"disc_f1", kDiscF1});
  src.push_back({"res_f1f2", kResF1F2});
  for (const auto& [name, text] : overrides) {
    bool found = false;
    for (auto& [n, t] : src) {
      if (n == name) {
        t = text;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  std::map<std::string, std::string> by_name(src.begin(), src.end());

  FormulaCatalog c;
  c.cubic_vars = make_vars({"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"});
  c.quartic_vars = make_vars({"A", "B", "C", "D", "E"});
  c.quadratic_vars = make_vars({"A", "B", "C", "D", "E", "F"});
  c.disc2 = parse_poly(by_name["disc2"], c.quadratic_vars);
  c.disc4 = parse_poly(by_name["disc4"], c.quartic_vars);
  c.S = parse_poly(by_name["S"], c.cubic_vars);
  c.T = parse_poly(by_name["T"], c.cubic_vars);
  for (int i = 0; i < 10; ++i) c.coeffs3[i] = parse_poly(by_name[std::string("coeffs3.") + cubic_names[i]], label_vars(3));
  for (int i = 0; i < 5; ++i) c.coeffs4[i] = parse_poly(by_name[std::string("coeffs4.") + cubic_names[i]], label_vars(4));
  for (int i = 0; i < 6; ++i) c.beta[i] = parse_poly(by_name["beta" + std::to_string(i + 1)], label_vars(6));
  c.disc_f1 = parse_poly(by_name["disc_f1"], label_vars(8));
  c.res_f1f2 = parse_poly(by_name["res_f1f2"], label_vars(8));
  c.sources = std::move(src);
  return c;
}

const FormulaCatalog& default_catalog() {
  static const FormulaCatalog c = build_catalog();
  return c;
}

}  // namespace f4v
