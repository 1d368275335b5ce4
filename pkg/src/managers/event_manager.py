from typing import Callable, List, Optional

from events.events import EventType, Event


class EventManager:
    """
    Centralized event management for engine steps.

    The manager maintains both a processing queue and a recent events history
    for debugging. Every registered event is also passed to the listeners, so
    tracing output follows the steps as they happen.

    Attributes
    ----------
    events : List[Event]
        FIFO queue of pending events for processing
    recent_events : List[Event]
        Rolling history of recent events for debugging and analysis
    max_recent_events : int
        Maximum number of events to retain in recent history
    listeners : List[Callable[[Event], None]]
        Callbacks invoked with every registered event
    """


    def __init__(self, max_recent_events: int = 50):
        self.events = []
        # Track the most recent events for easier access/debugging
        self.recent_events = []
        self.max_recent_events = max_recent_events
        self.listeners = []


    def add_listener(self, listener: Callable[[Event], None]):
        self.listeners.append(listener)


    def register_event(self, event_type: EventType, **kwargs) -> Event:
        """
        Create and register a new event and notify the listeners.

        Parameters
        ----------
        event_type : EventType
            The type of event being registered
        **kwargs : dict
            Additional event parameters such as move, netext, width, depth

        Returns
        -------
        Event
            The created and registered event object
        """
        event = Event(type=event_type, **kwargs)
        self.events.append(event)

        self.recent_events.append(event)
        if len(self.recent_events) > self.max_recent_events:
            self.recent_events.pop(0)

        for listener in self.listeners:
            listener(event)

        return event


    def get_event(self) -> Optional[Event]:
        """
        Retrieve and remove the oldest event from the queue.

        Returns
        -------
        Optional[Event]
            The oldest event in the queue, or None if queue is empty
        """
        if not self.events:
            return None
        return self.events.pop(0)


    def get_events_by_type(self, event_type: EventType) -> List[Event]:
        return [e for e in self.events if e.type == event_type]

