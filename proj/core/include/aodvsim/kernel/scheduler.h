#ifndef AODVSIM_KERNEL_SCHEDULER_H
#define AODVSIM_KERNEL_SCHEDULER_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "aodvsim/kernel/time.h"

namespace aodvsim {

enum class EventKind { Timer, PacketDelivery, TrafficEmit, SimEnd, Control };

/// Target used for events that do not belong to a single node.
inline constexpr int kGlobalTarget = -1;

/// Identifies a scheduled event for cancellation.
struct EventHandle {
  Time fire_at;
  std::uint64_t seq = 0;
};

/// Single-threaded discrete-event scheduler.
///
/// Events fire in (fire_at, insertion order) order. Cancelling an event that
/// already fired or was already cancelled is a no-op.
class Scheduler {
 public:
  using Action = std::function<void()>;

  struct Event {
    EventKind kind = EventKind::Control;
    int target = kGlobalTarget;
    Action action;
  };

  Scheduler() = default;
  Scheduler(const Scheduler&) = delete;
  Scheduler& operator=(const Scheduler&) = delete;

  Time now() const { return now_; }

  /// Queues `action` at now() + delay. Throws std::invalid_argument on a
  /// negative delay and std::logic_error once the scheduler has terminated.
  EventHandle schedule(Time delay, EventKind kind, int target, Action action);

  /// Queues `action` at an absolute time, which must not lie in the past.
  EventHandle schedule_at(Time at, EventKind kind, int target, Action action);

  /// Returns true if the event was pending and is now removed.
  bool cancel(const EventHandle& handle);

  /// Processes every event with fire_at <= t_end, then sets the clock to
  /// t_end. Returns the number of events processed. Throws
  /// std::invalid_argument if t_end < now().
  std::size_t run_until(Time t_end);

  /// After this, no further events may be scheduled and pending ones are
  /// discarded.
  void terminate();
  bool terminated() const { return terminated_; }

  std::size_t pending() const { return queue_.size(); }
  std::uint64_t processed() const { return processed_; }

  /// Kind and target of the event currently executing, if any.
  const Event* current() const { return current_; }

 private:
  using Key = std::pair<std::int64_t, std::uint64_t>;

  std::map<Key, Event> queue_;
  Time now_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t processed_ = 0;
  bool terminated_ = false;
  const Event* current_ = nullptr;
};

}  // namespace aodvsim

#endif  // AODVSIM_KERNEL_SCHEDULER_H
