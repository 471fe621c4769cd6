#include "aodvsim/simulation.h"

#include <stdexcept>

#include "aodvsim/aodv/packet_trace.h"
#include "aodvsim/net/traffic.h"

namespace aodvsim {

namespace {

Medium::Params medium_params(const ScenarioConfig& s) {
  Medium::Params p;
  p.range = s.range;
  p.per_hop_delay = s.per_hop_delay;
  p.link_layer_detection = s.aodv.link_layer_detection;
  return p;
}

}  // namespace

Simulation::Simulation(ScenarioConfig scenario, std::ostream* sink)
    : scenario_(std::move(scenario)),
      random_(scenario_.seed),
      mobility_(scenario_.positions, scenario_.motion),
      medium_(scheduler_, mobility_, medium_params(scenario_)) {
  scenario_.validate();
  if (sink != nullptr) writer_.emplace(*sink);
  medium_.set_handlers([this](NodeId to, const Packet& pkt) { on_receive(to, pkt); },
                       [this](NodeId from, const Packet& pkt) { agent(from).rt_ll_failed(pkt); });
  agents_.reserve(scenario_.nn);
  for (std::uint32_t i = 0; i < scenario_.nn; ++i) {
    agents_.push_back(std::make_unique<Agent>(static_cast<NodeId>(i), scenario_.aodv, *this));
  }
}

void Simulation::start() {
  if (started_) return;
  started_ = true;
  for (auto& a : agents_) a->start();
  for (std::size_t f = 0; f < scenario_.flows.size(); ++f) {
    const FlowSpec& flow = scenario_.flows[f];
    if (flow.start < flow.stop) {
      scheduler_.schedule_at(flow.start, EventKind::TrafficEmit, flow.src,
                             [this, f] { emit(f, 0); });
    }
  }
}

void Simulation::emit(std::size_t f, std::uint64_t k) {
  const FlowSpec& flow = scenario_.flows[f];
  originate(flow.src, flow.dst, flow.payload, static_cast<std::uint32_t>(k));
  const Time next = emission_time(flow, k + 1);
  if (next < flow.stop && next <= scenario_.stop) {
    scheduler_.schedule_at(next, EventKind::TrafficEmit, flow.src,
                           [this, f, k] { emit(f, k + 1); });
  }
}

void Simulation::originate(NodeId src, NodeId dst, std::uint32_t payload,
                           std::uint32_t flow_seq) {
  Packet p;
  p.kind = PacketKind::Data;
  p.uid = next_uid_++;
  p.size = payload;
  p.ip = IpHeader{src, kDataPort, dst, kDataPort, kDefaultIpTtl};
  p.flow_seq = flow_seq;
  trace(make_trace_record(trace::Event::Send, scheduler_.now(), src, trace::Layer::Agt, p));
  agent(src).recv(std::move(p));
}

void Simulation::run_until(Time t) {
  if (finished_) throw std::logic_error("simulation already finished");
  start();
  scheduler_.run_until(t);
}

void Simulation::run() {
  run_until(scenario_.stop);
  scheduler_.terminate();
  finished_ = true;
  if (writer_) writer_->flush();
}

void Simulation::at(Time t, std::function<void()> fn) {
  scheduler_.schedule_at(t, EventKind::Control, kGlobalTarget, std::move(fn));
}

void Simulation::trace(const trace::TraceRecord& rec) {
  records_.push_back(rec);
  if (writer_) writer_->write(rec);
}

void Simulation::transmit(NodeId from, const Packet& pkt) {
  if (pkt.next_hop == kBroadcast) {
    medium_.broadcast_deliver(pkt, from);
  } else {
    medium_.unicast_deliver(pkt, from, pkt.next_hop);
  }
}

void Simulation::on_receive(NodeId to, const Packet& pkt) {
  trace(make_trace_record(trace::Event::Receive, scheduler_.now(), to, trace::Layer::Rtr, pkt));
  agent(to).recv(pkt);
}

void Simulation::deliver_local(NodeId node, const Packet& pkt) {
  Packet up = pkt;
  up.size -= kIpHeaderBytes;
  trace(make_trace_record(trace::Event::Receive, scheduler_.now(), node, trace::Layer::Agt, up));
}

}  // namespace aodvsim
