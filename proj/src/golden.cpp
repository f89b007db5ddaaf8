#include <stdexcept>

#include "errors.hpp"
#include "verifier.hpp"

namespace kingmesh {

namespace {

std::vector<UPoly> parse_rows(std::initializer_list<std::string_view> rows) {
  std::vector<UPoly> out;
  for (auto r : rows) out.push_back(UPoly::parse(r));
  return out;
}

}  // namespace

std::vector<UPoly> golden_base(BaseSeries name) {
  switch (name) {
    case BaseSeries::A:
      return parse_rows({"1", "1", "0", "0", "2", "14", "90", "646", "5242", "47622", "479306", "5296790",
                         "63779034"});
    case BaseSeries::B:
      return parse_rows({"1", "0", "0", "0", "2", "12", "78", "568", "4674", "42948", "436358"});
    case BaseSeries::C:
      return parse_rows({"1", "0", "0", "0", "2", "10", "68", "500", "4174", "38774", "397584"});
    case BaseSeries::ATu:
      return parse_rows({"1", "u", "0", "0", "2", "10+4u", "68+20u+2u^2", "500+136u+10u^2"});
    case BaseSeries::BTu:
      return parse_rows({"1", "0", "0", "0", "2", "10+2u", "68+10u", "500+68u", "4174+500u"});
    case BaseSeries::CTu:
      return parse_rows({"1", "0", "0", "0", "2", "10", "68", "500", "4174"});
  }
  throw std::invalid_argument("golden_base: unknown series");
}

std::vector<UPoly> golden_distribution(std::string_view nr) {
  // Patterns that cannot occur: E(t,u) = A(t).
  if (nr == "11" || nr == "14" || nr == "30" || nr == "34" || nr == "36" || nr == "45")
    return golden_base(BaseSeries::A);
  if (nr == "X" || nr == "X'") return golden_base(BaseSeries::ATu);
  // A_n/2 avoiders and A_n/2 single occurrences for n >= 2.
  if (nr == "10")
    return parse_rows({"1", "1", "0", "0", "1+u", "7+7u", "45+45u", "323+323u", "2621+2621u", "23811+23811u",
                       "239653+239653u", "2648395+2648395u", "31889517+31889517u"});
  if (nr == "12" || nr == "16")
    return parse_rows({"1", "1", "0", "0", "2", "12+2u^4", "78+12u^5", "568+78u^6", "4674+568u^7"});
  if (nr == "13" || nr == "17" || nr == "33")
    return parse_rows({"1", "1", "0", "0", "2", "14", "88+2u", "636+10u", "5174+68u"});
  if (nr == "19") return parse_rows({"1", "1", "0", "0", "2", "12+2u", "76+14u", "556+90u", "4596+646u"});
  if (nr == "20") return parse_rows({"1", "1", "0", "0", "2", "14", "88+2u", "634+12u", "5164+78u"});
  if (nr == "22") return parse_rows({"1", "1", "0", "0", "2", "14", "86+4u", "618+28u", "5062+180u"});
  if (nr == "27")
    return parse_rows({"1", "1", "0", "0", "2", "14", "86+4u", "624+20u+2u^2", "5096+136u+10u^2"});
  if (nr == "28") return parse_rows({"1", "1", "0", "0", "2", "14", "88+2u", "632+14u", "5152+90u"});
  if (nr == "55") return parse_rows({"1", "1", "0", "0", "2", "14", "88+2u", "632+14u", "5152+88u+2u^2"});
  if (nr == "63")
    return parse_rows({"1", "1", "0", "0", "2", "12+2u", "76+14u", "556+88u+2u^2", "4592+636u+14u^2"});
  if (nr == "64")
    return parse_rows(
        {"1", "1", "0", "0", "2", "10+4u", "68+20u+2u^2", "500+136u+10u^2", "4170+1004u+68u^2"});
  throw UnknownPatternError("no printed expansion for pattern '" + std::string(nr) + "'");
}

}  // namespace kingmesh
