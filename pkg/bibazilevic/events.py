import abc
import datetime
import fractions
import json
import sys


def _json_value(value):
    if isinstance(value, datetime.datetime):
        return value.isoformat()
    if isinstance(value, fractions.Fraction):
        return str(value)
    if isinstance(value, complex):
        return str(value)
    if isinstance(value, dict):
        return {key: _json_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(item) for item in value]
    return value


class Event():
    """
    Base class for events that are emitted from a run.
    """
    def __init__(self) -> None:
        pass

    def to_dict(self) -> dict:
        return {field: _json_value(value) for field, value in self.__dict__.items()}

    def to_json(self):
        return json.dumps(self.to_dict(), default=str)


class EventHandler(abc.ABC):
    @abc.abstractmethod
    def handle_event(self, event: Event):
        pass


def notify_configured_event_handlers(event: Event):
    from . import config
    try:
        all_handlers = config.event_handlers()
    except BaseException as e:
        print(f"Exception while getting configured event handlers: {repr(e)}", file=sys.stderr)
        return

    for handler in all_handlers:
        try:
            handler.handle_event(event)
        except BaseException as e:
            print(f"Handler {repr(handler)} could not report about {repr(event)}: {repr(e)}", file=sys.stderr)
