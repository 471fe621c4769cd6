#include "aodvsim/kernel/scheduler.h"

#include <stdexcept>

namespace aodvsim {

EventHandle Scheduler::schedule(Time delay, EventKind kind, int target, Action action) {
  if (delay < Time{}) {
    throw std::invalid_argument("schedule: negative delay");
  }
  return schedule_at(now_ + delay, kind, target, std::move(action));
}

EventHandle Scheduler::schedule_at(Time at, EventKind kind, int target, Action action) {
  if (terminated_) {
    throw std::logic_error("schedule: simulation already terminated");
  }
  if (at < now_) {
    throw std::invalid_argument("schedule: event time lies in the past");
  }
  const std::uint64_t seq = next_seq_++;
  queue_.emplace(Key{at.ns(), seq}, Event{kind, target, std::move(action)});
  return EventHandle{at, seq};
}

bool Scheduler::cancel(const EventHandle& handle) {
  return queue_.erase(Key{handle.fire_at.ns(), handle.seq}) > 0;
}

std::size_t Scheduler::run_until(Time t_end) {
  if (t_end < now_) {
    throw std::invalid_argument("run_until: end time precedes the clock");
  }
  std::size_t count = 0;
  while (!queue_.empty()) {
    auto it = queue_.begin();
    if (it->first.first > t_end.ns()) break;
    now_ = Time::from_ns(it->first.first);
    Event ev = std::move(it->second);
    queue_.erase(it);
    current_ = &ev;
    if (ev.action) ev.action();
    current_ = nullptr;
    ++count;
    ++processed_;
    if (terminated_) break;
  }
  if (now_ < t_end) now_ = t_end;
  return count;
}

void Scheduler::terminate() {
  terminated_ = true;
  queue_.clear();
}

}  // namespace aodvsim
