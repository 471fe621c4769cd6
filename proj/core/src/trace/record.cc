#include "aodvsim/trace/record.h"

namespace aodvsim::trace {

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::Agt:
      return "AGT";
    case Layer::Rtr:
      return "RTR";
    case Layer::Ll:
      return "LL";
    case Layer::Ifq:
      return "IFQ";
    case Layer::Mac:
      return "MAC";
    case Layer::Phy:
      return "PHY";
  }
  return "?";
}

std::optional<Layer> layer_from_string(std::string_view s) {
  if (s == "AGT") return Layer::Agt;
  if (s == "RTR") return Layer::Rtr;
  if (s == "LL") return Layer::Ll;
  if (s == "IFQ") return Layer::Ifq;
  if (s == "MAC") return Layer::Mac;
  if (s == "PHY") return Layer::Phy;
  return std::nullopt;
}

std::string_view label_for_code(std::uint32_t code) {
  switch (code) {
    case 0x1:
      return "HELLO";
    case 0x2:
      return "REQUEST";
    case 0x4:
      return "REPLY";
    case 0x8:
      return "ERROR";
    default:
      return {};
  }
}

std::string_view TraceRecord::label() const {
  if (const auto* rp = std::get_if<ReplyInfo>(&payload)) return label_for_code(rp->code);
  if (const auto* rq = std::get_if<RequestInfo>(&payload)) return label_for_code(rq->code);
  if (const auto* re = std::get_if<ErrorInfo>(&payload)) return label_for_code(re->code);
  return {};
}

}  // namespace aodvsim::trace
